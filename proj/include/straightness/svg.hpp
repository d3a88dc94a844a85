#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "straightness/csv.hpp"

namespace straightness {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct AxesConfig {
  std::string title;
  std::string x_label = "x";
  std::string y_label = "y";
  std::optional<double> y_min;
  std::optional<double> y_max;
};

namespace detail {

inline std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline constexpr std::array<const char*, 8> kPalette = {
    "#d62728", "#9467bd", "#1f77b4", "#2ca02c", "#17becf", "#ff7f0e", "#8c564b", "#e377c2"};

}  // namespace detail

/// Line chart on a fixed 800x500 canvas: one polyline per series (a marker
/// for single-point series), a legend, and a dashed reference line at y = 1.
/// Output depends only on the input.
inline std::string render_svg(std::span<const Series> series, const AxesConfig& axes) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  constexpr double plot_w = kWidth - kLeft - kRight;
  constexpr double plot_h = kHeight - kTop - kBottom;

  bool any = false;
  double x_lo = 0, x_hi = 0, y_lo = 1.0, y_hi = 1.0;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!any) {
        x_lo = x_hi = x;
        any = true;
      }
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!any) throw InvalidInput("nothing to plot: all series are empty");
  if (x_hi == x_lo) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  const double pad = 0.05 * (y_hi - y_lo == 0 ? 1.0 : y_hi - y_lo);
  y_lo = axes.y_min.value_or(y_lo - pad);
  y_hi = axes.y_max.value_or(y_hi + pad);

  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };
  auto num = [](double v) { return format_fixed(v, 2); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  if (!axes.title.empty()) {
    out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << detail::xml_escape(axes.title)
        << "</text>\n";
  }

  // Axes and ticks.
  out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
      << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    out << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(kTop + plot_h + 16)
        << "\" text-anchor=\"middle\">" << format_number(xv, 3) << "</text>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(sy(yv) + 4)
        << "\" text-anchor=\"end\">" << format_number(yv, 3) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 16)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << detail::xml_escape(axes.x_label)
      << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "font-size=\"13\" transform=\"rotate(-90 18 " << num(kTop + plot_h / 2) << ")\">"
      << detail::xml_escape(axes.y_label) << "</text>\n</g>\n";

  if (y_lo <= 1.0 && 1.0 <= y_hi) {
    out << "<line class=\"reference\" x1=\"" << num(kLeft) << "\" y1=\"" << num(sy(1.0))
        << "\" x2=\"" << num(kLeft + plot_w) << "\" y2=\"" << num(sy(1.0))
        << "\" stroke=\"black\" stroke-dasharray=\"4 4\"/>\n";
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    const Series& s = series[i];
    const char* color = detail::kPalette[i % detail::kPalette.size()];
    if (s.points.size() == 1) {
      out << "<circle cx=\"" << num(sx(s.points[0].first)) << "\" cy=\""
          << num(sy(s.points[0].second)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    } else if (!s.points.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t p = 0; p < s.points.size(); ++p) {
        if (p > 0) out << ' ';
        out << num(sx(s.points[p].first)) << ',' << num(sy(s.points[p].second));
      }
      out << "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << num(kLeft + plot_w + 15) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kLeft + plot_w + 35) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(kLeft + plot_w + 40) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << detail::xml_escape(s.name)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

/// Groups table rows into series keyed by the joined values of
/// `series_columns` (in order of first appearance).
inline std::vector<Series> series_from_table(const CsvTable& table, std::string_view x_column,
                                             std::string_view y_column,
                                             const std::vector<std::string>& series_columns) {
  if (table.rows.empty()) throw InvalidInput("CSV has no data rows");
  const std::size_t xi = table.column(x_column);
  const std::size_t yi = table.column(y_column);
  std::vector<std::size_t> keys;
  for (const auto& name : series_columns) keys.push_back(table.column(name));

  std::vector<Series> out;
  for (const auto& row : table.rows) {
    std::string name;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (k > 0) name += ' ';
      name += table.header[keys[k]] + "=" + row[keys[k]];
    }
    if (name.empty()) name = std::string(y_column);
    auto it = std::find_if(out.begin(), out.end(), [&](const Series& s) { return s.name == name; });
    if (it == out.end()) {
      out.push_back({name, {}});
      it = out.end() - 1;
    }
    it->points.emplace_back(parse_number(row[xi]), parse_number(row[yi]));
  }
  return out;
}

}  // namespace straightness
