#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "straightness/analytic.hpp"
#include "straightness/csv.hpp"
#include "straightness/generators.hpp"
#include "straightness/metrics.hpp"
#include "straightness/svg.hpp"

namespace straightness {

// ---------------------------------------------------------------------------
// Analytic curves

struct CurveKind {
  NetworkKind kind = NetworkKind::rectilinear;
  int radii_count = 4;  // 4 for the grid (quadrants)
};

/// The grid plus radio-concentric networks with 3, 4, 8 and 16 radii.
inline std::vector<CurveKind> default_curve_kinds() {
  return {{NetworkKind::rectilinear, 4},
          {NetworkKind::radioconcentric, 3},
          {NetworkKind::radioconcentric, 4},
          {NetworkKind::radioconcentric, 8},
          {NetworkKind::radioconcentric, 16}};
}

struct CurveRow {
  double alpha = 0.0;
  double straightness = 0.0;
  CurveKind network;
};

inline std::vector<CurveRow> curve_table(const std::vector<CurveKind>& kinds, int alpha_steps,
                                         double alpha_max = std::numbers::pi / 4.0) {
  std::vector<CurveRow> rows;
  for (const CurveKind& kind : kinds) {
    for (const CurveSample& s : analytic_curve(kind.kind, kind.radii_count, alpha_steps, alpha_max)) {
      rows.push_back({s.alpha, s.straightness, kind});
    }
  }
  return rows;
}

inline void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << "alpha,straightness,network,k\n";
  for (const CurveRow& r : rows) {
    out << format_number(r.alpha, kAngleDigits) << ','
        << format_number(r.straightness, kValueDigits) << ',' << to_string(r.network.kind) << ','
        << r.network.radii_count << '\n';
  }
}

inline std::vector<Series> curve_series(const std::vector<CurveRow>& rows) {
  std::vector<Series> out;
  for (const CurveRow& r : rows) {
    const std::string name = r.network.kind == NetworkKind::rectilinear
                                 ? std::string("rectilinear")
                                 : "radial k=" + std::to_string(r.network.radii_count);
    if (out.empty() || out.back().name != name) out.push_back({name, {}});
    out.back().points.emplace_back(r.alpha, r.straightness);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simulation sweeps

struct SweepResult {
  std::vector<std::pair<std::string, int>> parameters;
  StraightnessSummary summary;
  long long wall_time_ms = 0;
};

inline constexpr int kMaxGridSize = 50;

namespace detail {
template <typename Build>
SweepResult timed_summary(std::vector<std::pair<std::string, int>> parameters, Build&& build,
                          unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const NetworkGraph graph = build();
  SweepResult result{std::move(parameters), summarize(graph, {threads, false}), 0};
  result.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return result;
}
}  // namespace detail

inline std::vector<SweepResult> sweep_rect(int min_size, int max_size, unsigned threads = 1) {
  if (min_size < 1 || max_size > kMaxGridSize || min_size > max_size) {
    throw InvalidInput("grid sizes must satisfy 1 <= min <= max <= " +
                       std::to_string(kMaxGridSize));
  }
  std::vector<SweepResult> out;
  for (int s = min_size; s <= max_size; ++s) {
    out.push_back(detail::timed_summary({{"squares_per_side", s}},
                                        [&] { return generate_rectilinear({s}); }, threads));
  }
  return out;
}

struct RadialSweepRange {
  int radii_min = 3;
  int radii_max = 20;
  int rings_min = 1;
  int rings_max = 5;
  int side_subdivision = 1;
};

/// Rows ordered by rings, then radii.
inline std::vector<SweepResult> sweep_radial(const RadialSweepRange& range, unsigned threads = 1) {
  if (range.radii_min > range.radii_max || range.rings_min > range.rings_max) {
    throw InvalidInput("empty radial sweep range");
  }
  validate(RadialSpec{range.radii_min, range.rings_min, range.side_subdivision});
  std::vector<SweepResult> out;
  for (int m = range.rings_min; m <= range.rings_max; ++m) {
    for (int k = range.radii_min; k <= range.radii_max; ++k) {
      const RadialSpec spec{k, m, range.side_subdivision};
      out.push_back(detail::timed_summary({{"radii", k}, {"rings", m}},
                                          [&] { return generate_radioconcentric(spec); },
                                          threads));
    }
  }
  return out;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& rows) {
  if (rows.empty()) throw InvalidInput("empty sweep");
  for (const auto& [name, value] : rows.front().parameters) out << name << ',';
  out << "pair_count,mean,std_dev,skipped\n";
  for (const SweepResult& r : rows) {
    for (const auto& [name, value] : r.parameters) out << value << ',';
    out << r.summary.pair_count << ',' << format_number(r.summary.mean, kValueDigits) << ','
        << format_number(r.summary.std_dev, kValueDigits) << ',' << r.summary.skipped_pairs
        << '\n';
  }
}

/// Mean straightness against the first parameter, one series per value of
/// the remaining parameters.
inline std::vector<Series> sweep_series(const std::vector<SweepResult>& rows) {
  std::vector<Series> out;
  for (const SweepResult& r : rows) {
    std::string name = "mean";
    for (std::size_t i = 1; i < r.parameters.size(); ++i) {
      name = r.parameters[i].first + "=" + std::to_string(r.parameters[i].second);
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const Series& s) { return s.name == name; });
    if (it == out.end()) {
      out.push_back({name, {}});
      it = out.end() - 1;
    }
    it->points.emplace_back(r.parameters.front().second, r.summary.mean);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Consistency checks between closed forms, geometry and graphs

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// The pieces under test. Defaults are the library implementations; tests
/// substitute faulty versions to make sure the checks catch them.
struct ValidationModel {
  RadialFormula radial = straightness_radial;
  RectilinearFormula rectilinear = straightness_rectilinear;
  std::function<NetworkGraph(const RadialSpec&)> radial_generator = generate_radioconcentric;
};

inline std::vector<CheckResult> run_validation(const ValidationModel& model = {}) {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, double deviation, double tolerance) {
    results.push_back({std::move(name), deviation, tolerance, deviation <= tolerance});
  };

  {
    double worst = 0.0;
    for (int k = 3; k <= 32; ++k) {
      const Sector sector = Sector::from_radii(k);
      const double theta = sector.theta();
      for (int i = 0; i <= 64; ++i) {
        const double alpha = theta / 2.0 * i / 64;
        worst = std::max(worst, std::abs(model.radial(sector, alpha) -
                                         model.radial(sector, theta - alpha)));
        worst = std::max(worst, std::abs(ripple_straightness_radial(sector, alpha) -
                                         ripple_straightness_radial(sector, theta - alpha)));
      }
    }
    for (int i = 0; i <= 64; ++i) {
      const double alpha = kRectilinearTheta / 2.0 * i / 64;
      worst = std::max(worst, std::abs(model.rectilinear(alpha) -
                                       model.rectilinear(kRectilinearTheta - alpha)));
    }
    record("symmetry", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (int k = 3; k <= 32; ++k) {
      const Sector sector = Sector::from_radii(k);
      for (int i = 0; i <= 16; ++i) {
        const double alpha = sector.theta() * i / 16;
        for (int j = -2; j <= 3; ++j) {
          worst = std::max(worst, std::abs(model.radial(sector, alpha + j * sector.theta()) -
                                           model.radial(sector, alpha)));
        }
      }
    }
    record("rotation", worst, 1e-12);
  }

  {
    const Sector sector = Sector::from_radii(10000);
    double lowest = 1.0;
    for (int i = 0; i <= 1000; ++i) {
      lowest = std::min(lowest, model.radial(sector, sector.theta() / 2.0 * i / 1000));
    }
    record("limit", 1.0 - lowest, 1e-3);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Sector sector = Sector::from_radii(3 + i % 30);
      const double fraction = std::fmod(i * std::numbers::phi, 1.0);
      const double alpha = sector.theta() * fraction;
      worst = std::max(worst,
                       std::abs(mesh_oracle_radial(sector, alpha) - model.radial(sector, alpha)));
    }
    record("oracle", worst, 1e-9);
  }

  {
    double worst = 0.0;
    for (int s = 1; s <= 20; ++s) {
      worst = std::max(worst, center_curve_check(generate_rectilinear({s}), model.rectilinear));
    }
    record("center_curve", worst, 1e-9);
  }

  {
    double deviation = 0.0;
    double spread = 0.0;
    for (int k : {4, 8, 16}) {
      for (int m : {1, 3}) {
        const RadialSpec spec{k, m, 4};
        const RadialCheck check =
            center_radial_check(model.radial_generator(spec), spec, model.radial);
        deviation = std::max(deviation, check.max_deviation);
        spread = std::max(spread, check.max_ring_spread);
      }
    }
    record("center_radial", deviation, 1e-9);
    record("homothety", spread, 1e-9);
  }
  return results;
}

}  // namespace straightness
