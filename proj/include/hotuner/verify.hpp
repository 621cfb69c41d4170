#pragma once
// Property suites behind `hotuner verify`: stability certificates over
// adversarial streams, trajectory equivalences, golden gain values, and the
// frequency/spatial convolution oracle.

#include <string>
#include <vector>

namespace hot {

struct CheckResult {
  std::string name;
  bool pass = false;
  double slack = 0.0;  // worst margin observed (negative means violated)
  std::string detail;
};

const std::vector<std::string>& verify_suite_names();

// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

std::string check_results_json(const std::string& suite,
                               const std::vector<CheckResult>& results);

}  // namespace hot
