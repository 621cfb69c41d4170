#pragma once
// Per-iteration trace rows and the CSV schema they serialize into.

#include <filesystem>
#include <string>
#include <vector>

namespace hot {

struct TraceRow {
  long k = 0;
  double loss = 0.0;
  double loss_gap = 0.0;
  double normalized_loss_gap = 0.0;  // gap / smoothness
  double V = 0.0;
  double delta_V = 0.0;
  double bound = 0.0;
  double envelope = 0.0;
  int satisfied = 1;
};

inline constexpr const char* kTraceHeader =
    "k,loss,loss_gap,normalized_loss_gap,V,delta_V,bound,envelope,satisfied,"
    "diverged_at";

// Floats are printed with 17 significant digits; diverged_at (-1 when the
// run stayed bounded) repeats on every row.
void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceRow>& rows, long diverged_at);

struct TraceFile {
  std::vector<TraceRow> rows;
  long diverged_at = -1;
};

TraceFile read_trace_csv(const std::filesystem::path& path);

// 17-significant-digit form used across CSV output.
std::string format_double(double v);

}  // namespace hot
