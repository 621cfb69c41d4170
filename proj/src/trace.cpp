#include "hotuner/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hot {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceRow>& rows, long diverged_at) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kTraceHeader << "\n";
  for (const TraceRow& r : rows) {
    out << r.k << ',' << format_double(r.loss) << ','
        << format_double(r.loss_gap) << ','
        << format_double(r.normalized_loss_gap) << ',' << format_double(r.V)
        << ',' << format_double(r.delta_V) << ',' << format_double(r.bound)
        << ',' << format_double(r.envelope) << ',' << r.satisfied << ','
        << diverged_at << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

TraceFile read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV " + path.string());
  if (line != kTraceHeader)
    throw std::runtime_error("unexpected CSV header in " + path.string());
  TraceFile tf;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10)
      throw std::runtime_error("malformed CSV row in " + path.string());
    // strtod handles the nan/inf spellings that stream extraction rejects
    auto num = [&](int i) {
      char* end = nullptr;
      const double v = std::strtod(fields[i].c_str(), &end);
      if (end == fields[i].c_str())
        throw std::runtime_error("malformed CSV field in " + path.string());
      return v;
    };
    TraceRow r;
    r.k = static_cast<long>(num(0));
    r.loss = num(1);
    r.loss_gap = num(2);
    r.normalized_loss_gap = num(3);
    r.V = num(4);
    r.delta_V = num(5);
    r.bound = num(6);
    r.envelope = num(7);
    r.satisfied = static_cast<int>(num(8));
    tf.rows.push_back(r);
    tf.diverged_at = static_cast<long>(num(9));
  }
  return tf;
}

}  // namespace hot
