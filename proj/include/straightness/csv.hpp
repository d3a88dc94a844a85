#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "straightness/core.hpp"
#include "straightness/shortest_paths.hpp"

namespace straightness {

inline constexpr int kAngleDigits = 12;
inline constexpr int kValueDigits = 9;

/// Shortest round-trip-free rendering with `significant` digits, independent
/// of the global locale.
inline std::string format_number(double value, int significant) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, significant);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  std::string out(buf, end);
  // Avoid "-0.00".
  if (out.front() == '-' && out.find_first_not_of("0.", 1) == std::string::npos) out.erase(0, 1);
  return out;
}

inline void write_pair_csv(std::ostream& out, const NetworkGraph& graph,
                           const std::vector<DistanceRow>& rows) {
  out << "u,v,d_spatial,d_geodesic,straightness\n";
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    for (NodeId v = u + 1; v < graph.node_count(); ++v) {
      const double d_s = graph.spatial_distance(u, v);
      const double d_g = rows[u].distances[v];
      const bool ok = std::isfinite(d_g) && d_s > 0.0;
      out << u << ',' << v << ',' << format_number(d_s, kAngleDigits) << ','
          << format_number(d_g, kAngleDigits) << ','
          << (ok ? format_number(d_s / d_g, kValueDigits) : std::string("nan")) << '\n';
    }
  }
}

/// Minimal CSV table: header row plus string cells. No quoting support; the
/// files produced here never need it.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw InvalidInput("CSV has no column \"" + std::string(name) + "\"");
  }
};

namespace detail {
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}
}  // namespace detail

inline CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = detail::split_csv_line(line);
    if (first) {
      table.header = std::move(cells);
      first = false;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw InvalidInput("CSV row has " + std::to_string(cells.size()) +
                         " cells, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (first) throw InvalidInput("CSV is empty");
  return table;
}

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_csv(in);
}

inline double parse_number(const std::string& cell) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("not a number: \"" + cell + "\"");
  }
}

}  // namespace straightness
