#pragma once
// Deterministic SVG line plots: fixed canvas, fixed palette ordered by
// method tag, log-scale y axis. Identical inputs produce byte-identical
// files.

#include <filesystem>
#include <string>
#include <vector>

namespace hot {

struct PlotSeries {
  std::string label;
  std::string color;  // empty picks from the palette by position
  std::vector<std::pair<double, double>> points;  // (k, value)
  long diverged_at = -1;  // draws a marker and annotation when >= 0
  bool dashed = false;    // used for analytic bound curves
};

struct PlotOptions {
  std::string title;
  std::string x_label = "iteration k";
  std::string y_label;
  bool log_y = true;
};

// Throws std::invalid_argument when no series has a plottable point.
void write_svg_plot(const std::filesystem::path& path,
                    const std::vector<PlotSeries>& series,
                    const PlotOptions& options);

// Reads trace CSVs and plots one column ("loss", "loss_gap",
// "normalized_loss_gap", "V"); labels default to the file stems.
void plot_csv_files(const std::vector<std::filesystem::path>& inputs,
                    const std::filesystem::path& output,
                    const std::string& column);

const std::vector<std::string>& plot_palette();

}  // namespace hot
