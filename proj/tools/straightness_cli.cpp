// Command-line front end: graph generation, analytic curves, simulation
// sweeps, consistency checks and plotting.
//
// Exit codes: 0 success, 1 invalid arguments, 2 failed consistency check,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "straightness/straightness.hpp"

namespace {

using namespace straightness;

constexpr int kExitInvalid = 1;
constexpr int kExitViolation = 2;
constexpr int kExitIo = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

std::vector<CurveKind> parse_kinds(const std::vector<std::string>& tokens) {
  std::vector<CurveKind> kinds;
  for (const std::string& t : tokens) {
    if (t == "rect" || t == "rectilinear") {
      kinds.push_back({NetworkKind::rectilinear, 4});
      continue;
    }
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw InvalidInput("unknown network kind \"" + t + "\" (use rect or a radius count)");
    }
    Sector::from_radii(k);
    kinds.push_back({NetworkKind::radioconcentric, k});
  }
  if (kinds.empty()) throw InvalidInput("no network kinds given");
  return kinds;
}

struct GenOptions {
  std::string kind;
  int size = 4;
  int radii = 8;
  int rings = 3;
  int subdivision = 1;
  std::string out = "-";
};

int run_gen(const GenOptions& o) {
  NetworkGraph graph;
  if (o.kind == "rect") {
    graph = generate_rectilinear({o.size});
  } else if (o.kind == "radial") {
    graph = generate_radioconcentric({o.radii, o.rings, o.subdivision});
  } else {
    throw InvalidInput("gen kind must be rect or radial");
  }
  write_output(o.out, graph_to_json(graph).dump(2) + "\n");
  std::cerr << "nodes: " << graph.node_count() << " edges: " << graph.edge_count() << "\n";
  return 0;
}

struct CurveOptions {
  std::vector<std::string> kinds{"rect", "3", "4", "8", "16"};
  int steps = 181;
  double alpha_max = std::numbers::pi / 4.0;
  std::string out = "-";
  std::string svg;
};

int run_curve(const CurveOptions& o) {
  const auto rows = curve_table(parse_kinds(o.kinds), o.steps, o.alpha_max);
  std::ostringstream csv;
  write_curve_csv(csv, rows);
  write_output(o.out, csv.str());
  if (!o.svg.empty()) {
    AxesConfig axes{"Center-to-periphery straightness", "alpha (rad)", "S", std::nullopt,
                    std::nullopt};
    write_output(o.svg, render_svg(curve_series(rows), axes));
  }
  return 0;
}

struct SweepOptions {
  int size_min = 1;
  int size_max = 12;
  RadialSweepRange radial;
  std::string out = "-";
  std::string svg;
};

void report_timing(const std::vector<SweepResult>& rows) {
  for (const SweepResult& r : rows) {
    for (const auto& [name, value] : r.parameters) std::cerr << name << '=' << value << ' ';
    std::cerr << "mean=" << format_number(r.summary.mean, 6) << " (" << r.wall_time_ms
              << " ms)\n";
  }
}

int emit_sweep(const std::vector<SweepResult>& rows, const SweepOptions& o,
               const std::string& x_label) {
  report_timing(rows);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_output(o.out, csv.str());
  if (!o.svg.empty()) {
    AxesConfig axes{"Average straightness", x_label, "mean S", std::nullopt, std::nullopt};
    write_output(o.svg, render_svg(sweep_series(rows), axes));
  }
  return 0;
}

struct SummaryCliOptions {
  std::string graph;
  std::string pairs_csv;
  bool strict = false;
};

int run_straightness(const SummaryCliOptions& o) {
  const NetworkGraph graph = read_graph_json(o.graph);
  const unsigned threads = threads_from_env();
  const StraightnessSummary s = summarize(graph, {threads, o.strict});
  std::cout << "nodes," << graph.node_count() << "\n"
            << "edges," << graph.edge_count() << "\n"
            << "pair_count," << s.pair_count << "\n"
            << "mean," << format_number(s.mean, kValueDigits) << "\n"
            << "std_dev," << format_number(s.std_dev, kValueDigits) << "\n"
            << "skipped," << s.skipped_pairs << "\n";
  if (!o.pairs_csv.empty()) {
    std::ostringstream csv;
    write_pair_csv(csv, graph, all_pairs(graph, threads));
    write_output(o.pairs_csv, csv.str());
  }
  return 0;
}

int run_validate() {
  bool ok = true;
  for (const CheckResult& c : run_validation()) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name
              << " max_deviation=" << format_number(c.max_deviation, 6)
              << " tolerance=" << format_number(c.tolerance, 3) << "\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : kExitViolation;
}

struct PlotOptions {
  std::string csv;
  std::string x = "alpha";
  std::string y = "straightness";
  std::vector<std::string> series;
  std::string title;
  std::string out = "-";
};

int run_plot(const PlotOptions& o) {
  const CsvTable table = read_csv(o.csv);
  AxesConfig axes{o.title, o.x, o.y, std::nullopt, std::nullopt};
  write_output(o.out, render_svg(series_from_table(table, o.x, o.y, o.series), axes));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straightness of rectilinear and radio-concentric networks"};
  app.require_subcommand(1);
  int status = 0;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a network as graph JSON");
  gen_cmd->add_option("kind", gen.kind, "rect or radial")->required();
  gen_cmd->add_option("--size", gen.size, "Squares per side (rect)");
  gen_cmd->add_option("--radii", gen.radii, "Number of radii (radial)");
  gen_cmd->add_option("--rings", gen.rings, "Number of rings (radial)");
  gen_cmd->add_option("--subdivision", gen.subdivision, "Segments per side chord (radial)");
  gen_cmd->add_option("--out,-o", gen.out, "Output path, - for stdout");
  gen_cmd->callback([&] { status = run_gen(gen); });

  CurveOptions curve;
  auto* curve_cmd = app.add_subcommand("curve", "Closed-form straightness against alpha");
  curve_cmd->add_option("--kinds", curve.kinds, "rect and/or radius counts")->delimiter(',');
  curve_cmd->add_option("--steps", curve.steps, "Samples per network (>= 2)");
  curve_cmd->add_option("--alpha-max", curve.alpha_max, "Upper end of the alpha range (rad)");
  curve_cmd->add_option("--out,-o", curve.out, "CSV output path, - for stdout");
  curve_cmd->add_option("--svg", curve.svg, "Optional SVG output path");
  curve_cmd->callback([&] { status = run_curve(curve); });

  SweepOptions sweep;
  auto* rect_cmd = app.add_subcommand("sweep-rect", "All-pairs straightness of grids by size");
  rect_cmd->add_option("--min", sweep.size_min, "Smallest squares per side");
  rect_cmd->add_option("--max", sweep.size_max, "Largest squares per side (<= 50)");
  rect_cmd->add_option("--out,-o", sweep.out, "CSV output path, - for stdout");
  rect_cmd->add_option("--svg", sweep.svg, "Optional SVG output path");
  rect_cmd->callback([&] {
    status = emit_sweep(sweep_rect(sweep.size_min, sweep.size_max, threads_from_env()), sweep,
                        "squares per side");
  });

  auto* radial_cmd =
      app.add_subcommand("sweep-radial", "All-pairs straightness of radio-concentric networks");
  radial_cmd->add_option("--radii-min", sweep.radial.radii_min, "Fewest radii (>= 3)");
  radial_cmd->add_option("--radii-max", sweep.radial.radii_max, "Most radii");
  radial_cmd->add_option("--rings-min", sweep.radial.rings_min, "Fewest rings");
  radial_cmd->add_option("--rings-max", sweep.radial.rings_max, "Most rings");
  radial_cmd->add_option("--subdivision", sweep.radial.side_subdivision,
                         "Segments per side chord");
  radial_cmd->add_option("--out,-o", sweep.out, "CSV output path, - for stdout");
  radial_cmd->add_option("--svg", sweep.svg, "Optional SVG output path");
  radial_cmd->callback([&] {
    status = emit_sweep(sweep_radial(sweep.radial, threads_from_env()), sweep, "radii");
  });

  SummaryCliOptions summary;
  auto* summary_cmd =
      app.add_subcommand("straightness", "Straightness summary of a graph JSON file");
  summary_cmd->add_option("graph", summary.graph, "Graph JSON path")->required();
  summary_cmd->add_option("--pairs-csv", summary.pairs_csv, "Optional per-pair CSV output");
  summary_cmd->add_flag("--strict", summary.strict, "Fail on unreachable or co-located pairs");
  summary_cmd->callback([&] { status = run_straightness(summary); });

  auto* validate_cmd = app.add_subcommand("validate", "Run the consistency checks");
  validate_cmd->callback([&] { status = run_validate(); });

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render a CSV table as an SVG line chart");
  plot_cmd->add_option("csv", plot.csv, "Input CSV")->required();
  plot_cmd->add_option("--x", plot.x, "X column");
  plot_cmd->add_option("--y", plot.y, "Y column");
  plot_cmd->add_option("--series", plot.series, "Columns identifying a series")->delimiter(',');
  plot_cmd->add_option("--title", plot.title, "Chart title");
  plot_cmd->add_option("--out,-o", plot.out, "SVG output path, - for stdout");
  plot_cmd->callback([&] { status = run_plot(plot); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return status;
}
