#include "hotuner/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hotuner/trace.hpp"

namespace hot {

const std::vector<std::string>& plot_palette() {
  static const std::vector<std::string> palette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
      "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  return palette;
}

namespace {

constexpr double kWidth = 960.0, kHeight = 600.0;
constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 50.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg_plot(const std::filesystem::path& path,
                    const std::vector<PlotSeries>& series,
                    const PlotOptions& opt) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool any = false;
  for (const PlotSeries& s : series) {
    for (auto [x, y] : s.points) {
      if (opt.log_y && !(y > 0.0)) continue;
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      const double yv = opt.log_y ? std::log10(y) : y;
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = yv;
        any = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, yv);
        ymax = std::max(ymax, yv);
      }
    }
  }
  if (!any) throw std::invalid_argument("nothing to plot");
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double yv) {
    return kTop + (ymax - yv) / (ymax - ymin) * plot_h;
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << xml_escape(opt.title) << "</text>\n";

  // frame
  out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
      << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  // x ticks: five evenly spaced
  for (int i = 0; i <= 4; ++i) {
    const double x = xmin + (xmax - xmin) * i / 4.0;
    out << "<line x1=\"" << fmt(sx(x)) << "\" y1=\"" << fmt(kTop + plot_h)
        << "\" x2=\"" << fmt(sx(x)) << "\" y2=\"" << fmt(kTop + plot_h + 5)
        << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << fmt(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << fmt_tick(std::round(x)) << "</text>\n";
  }
  // y ticks: decades when log scale, else five
  if (opt.log_y) {
    const int d0 = static_cast<int>(std::ceil(ymin));
    const int d1 = static_cast<int>(std::floor(ymax));
    const int step = std::max(1, (d1 - d0) / 8 + 1);
    for (int d = d0; d <= d1; d += step) {
      out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(sy(d))
          << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(sy(d))
          << "\" stroke=\"#333333\"/>\n";
      out << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(sy(d) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
             "font-size=\"12\">1e"
          << d << "</text>\n";
    }
  } else {
    for (int i = 0; i <= 4; ++i) {
      const double yv = ymin + (ymax - ymin) * i / 4.0;
      out << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(sy(yv) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
             "font-size=\"12\">"
          << fmt_tick(yv) << "</text>\n";
    }
  }
  out << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\""
      << fmt(kHeight - 12)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << xml_escape(opt.x_label) << "</text>\n";
  if (!opt.y_label.empty()) {
    out << "<text x=\"16\" y=\"" << fmt(kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 16 "
        << fmt(kTop + plot_h / 2) << ")\">" << xml_escape(opt.y_label)
        << "</text>\n";
  }

  for (std::size_t si = 0; si < series.size(); ++si) {
    const PlotSeries& s = series[si];
    const std::string color =
        s.color.empty() ? plot_palette()[si % plot_palette().size()] : s.color;
    std::string pts;
    bool started = false;
    for (auto [x, y] : s.points) {
      if (opt.log_y && !(y > 0.0)) continue;
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      const double yv = opt.log_y ? std::log10(y) : y;
      pts += (started ? " " : "");
      pts += fmt(sx(x)) + "," + fmt(sy(yv));
      started = true;
    }
    if (started) {
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"";
      if (s.dashed) out << " stroke-dasharray=\"6 4\"";
      out << " points=\"" << pts << "\"/>\n";
    }
    if (s.diverged_at >= 0) {
      const double x = sx(static_cast<double>(s.diverged_at));
      out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\""
          << fmt(x) << "\" y2=\"" << fmt(kTop + plot_h) << "\" stroke=\""
          << color << "\" stroke-dasharray=\"2 3\"/>\n";
      out << "<text x=\"" << fmt(x + 4) << "\" y=\""
          << fmt(kTop + 14 + 14 * static_cast<double>(si))
          << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
          << "\">diverged @" << s.diverged_at << "</text>\n";
    }
  }

  // legend, top-right inside the frame
  const double lx = kLeft + plot_w - 330.0;
  double ly = kTop + 10.0;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const PlotSeries& s = series[si];
    const std::string color =
        s.color.empty() ? plot_palette()[si % plot_palette().size()] : s.color;
    out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly + 4) << "\" x2=\""
        << fmt(lx + 24) << "\" y2=\"" << fmt(ly + 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n";
    out << "<text x=\"" << fmt(lx + 30) << "\" y=\"" << fmt(ly + 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(s.label) << "</text>\n";
    ly += 16.0;
  }

  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void plot_csv_files(const std::vector<std::filesystem::path>& inputs,
                    const std::filesystem::path& output,
                    const std::string& column) {
  std::vector<PlotSeries> series;
  for (const auto& in : inputs) {
    const TraceFile tf = read_trace_csv(in);
    PlotSeries s;
    s.label = in.stem().string();
    s.diverged_at = tf.diverged_at;
    for (const TraceRow& r : tf.rows) {
      double v;
      if (column == "loss") v = r.loss;
      else if (column == "loss_gap") v = r.loss_gap;
      else if (column == "normalized_loss_gap") v = r.normalized_loss_gap;
      else if (column == "V") v = r.V;
      else throw std::invalid_argument("unknown plot column '" + column + "'");
      s.points.emplace_back(static_cast<double>(r.k), v);
    }
    series.push_back(std::move(s));
  }
  PlotOptions opt;
  opt.title = column;
  opt.y_label = column;
  write_svg_plot(output, series, opt);
}

}  // namespace hot
