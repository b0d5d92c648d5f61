#pragma once

// Command-line front end: count, shape, verify and wulff subcommands.
// Exit codes: 0 success, 1 runtime failure, 2 usage error. Output is built in
// memory and only written once the whole command has succeeded.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wulffnt/counting.hpp"
#include "wulffnt/entropy.hpp"
#include "wulffnt/io.hpp"
#include "wulffnt/shapes.hpp"
#include "wulffnt/wulff.hpp"

namespace wulffnt::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind = "young";
  long long n = -1;
  std::vector<std::size_t> ns;
  bool scaled = false;
  int samples = 0;
  double window = kDefaultWindow;
  std::string format;
  std::string output_path = "-";
  double mollify_delta = 0.0;
  // wulff
  std::string eta_table;
  int dim = 1;
  double volume = 0.0;
  double cube_n = 0.0;
};

namespace detail {

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

inline CountKind parse_kind(const std::string& k) { return k == "young" ? CountKind::young : CountKind::skyscraper; }

inline std::string run_count(const RunConfig& c) {
  const auto n = static_cast<std::size_t>(c.n);
  const auto table = parse_kind(c.kind) == CountKind::young ? partition_table(n) : plane_partition_table(n);
  return table.values[n].str() + "\n";
}

inline std::string run_shape(const RunConfig& c) {
  if (c.kind == "young") {
    const int samples = c.samples > 0 ? c.samples : 256;
    const auto pts = vershik_samples(samples, c.scaled);
    if (c.format == "svg") {
      std::vector<Vec2> xs;
      for (const auto& s : pts) xs.push_back(s.x);
      return write_svg(xs);
    }
    return write_samples_csv<1>(pts);
  }
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(c.samples > 0 ? c.samples : 64 * 64))));
  if (m < 2) throw UsageError("--samples too small for a skyscraper grid");
  if (c.format == "obj") return write_obj(sample_cerf_kenyon(m, c.scaled));
  return write_samples_csv<2>(cerf_kenyon_samples(m, c.scaled));
}

inline std::string run_verify(const RunConfig& c) {
  const auto kind = parse_kind(c.kind);
  const std::size_t top = *std::max_element(c.ns.begin(), c.ns.end());
  const auto table = kind == CountKind::young ? partition_table(top) : plane_partition_table(top);
  const auto report = asymptotic_report(kind, c.ns, table);
  return c.format == "json" ? report_json(report) : report_csv(report);
}

struct WulffOutput {
  std::string report;
  std::string shape_csv;
};

template <int D>
WulffOutput run_wulff_dim(const RunConfig& c) {
  std::istringstream in(read_file(c.eta_table));
  Tension<D> eta = table_tension<D>(parse_eta_table<D>(in));
  if (c.mollify_delta > 0.0) eta = mollify(eta, c.mollify_delta);
  const int samples = c.samples > 0 ? c.samples : default_samples<D>();
  const CubeProblem<D> problem{c.cube_n, c.volume, eta};
  const auto shape = scaled_maximizer(problem, samples, c.window);
  const double functional = functional_value(eta, shape);
  const double dual = functional_value(dual_tension(eta, c.cube_n), shape);
  const double volume = enclosed_volume(shape);
  const double residual = duality_residual(eta, c.cube_n, shape);
  const std::vector<std::pair<std::string, double>> rows{
      {"dim", D},          {"N", c.cube_n},  {"V", c.volume},          {"lambda", shape.scale},
      {"volume", volume},  {"functional", functional}, {"dual_functional", dual},
      {"projection_area", projection_area(shape, c.cube_n)}, {"duality_residual", residual}};
  WulffOutput out;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : rows) {
      if (k == "dim") {
        j[k] = D;
      } else {
        j[k] = wulffnt::detail::round12(v);
      }
    }
    out.report = j.dump(2) + "\n";
  } else {
    out.report = "quantity,value\n";
    for (const auto& [k, v] : rows) out.report += k + "," + fmt(v) + "\n";
  }
  if (!c.output_path.empty()) out.shape_csv = write_samples_csv<D>(facet_samples(shape, eta));
  return out;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Wulff-type limit shapes of partitions and plane partitions", "wulffnt"};
  app.require_subcommand(1);
  RunConfig c;
  const std::vector<std::string> kinds{"young", "skyscraper"};

  auto* count = app.add_subcommand("count", "Print the exact count p(N) or pp(N)");
  count->add_option("--kind", c.kind, "young | skyscraper")->required()->check(CLI::IsMember(kinds));
  count->add_option("--n", c.n, "N")->required()->check(CLI::NonNegativeNumber);

  auto* shape = app.add_subcommand("shape", "Sample a closed-form limit shape");
  shape->add_option("--kind", c.kind, "young | skyscraper")->required()->check(CLI::IsMember(kinds));
  shape->add_flag("--scaled", c.scaled, "Normalize to unit area / volume");
  shape->add_option("--samples", c.samples, "Curve points (young) or about m^2 grid points (skyscraper)")
      ->check(CLI::PositiveNumber);
  shape->add_option("--format", c.format, "csv | svg | obj")->check(CLI::IsMember({"csv", "svg", "obj"}));
  shape->add_option("-o,--output", c.output_path, "Output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "Compare log-counts with the leading exponent");
  verify->add_option("--kind", c.kind, "young | skyscraper")->required()->check(CLI::IsMember(kinds));
  verify->add_option("--ns", c.ns, "Comma-separated list of N")->required()->delimiter(',')->check(
      CLI::PositiveNumber);
  verify->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("-o,--output", c.output_path, "Output path, - for stdout");

  auto* wulff = app.add_subcommand("wulff", "Solve the cube problem for a tabulated eta");
  std::string shape_out;
  wulff->add_option("--eta-table", c.eta_table, "CSV with columns n1,n2[,n3],value")->required();
  wulff->add_option("--dim", c.dim, "d = 1 or 2")->required()->check(CLI::IsMember({1, 2}));
  wulff->add_option("--volume", c.volume, "Target volume V")->required()->check(CLI::PositiveNumber);
  wulff->add_option("--cube-n", c.cube_n, "Cube side N")->required()->check(CLI::PositiveNumber);
  wulff->add_option("--samples", c.samples, "Sampled normals")->check(CLI::Range(16, 1 << 22));
  wulff->add_option("--window", c.window, "Window for the raw inner body")->check(CLI::PositiveNumber);
  wulff->add_option("--mollify-delta", c.mollify_delta, "Boundary band width")->check(CLI::NonNegativeNumber);
  wulff->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  wulff->add_option("-o,--shape-out", shape_out, "Write the maximizer facets as CSV (- for stdout)");

  std::vector<const char*> argv{"wulffnt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    std::string text;
    if (count->parsed()) {
      text = detail::run_count(c);
    } else if (shape->parsed()) {
      if (c.format.empty()) c.format = "csv";
      if (c.format == "svg" && c.kind != "young") throw UsageError("svg output is only for the young (d = 1) shape");
      if (c.format == "obj" && c.kind != "skyscraper") throw UsageError("obj output is only for the skyscraper (d = 2) shape");
      text = detail::run_shape(c);
    } else if (verify->parsed()) {
      if (c.format.empty()) c.format = "csv";
      text = detail::run_verify(c);
    } else {
      if (c.format.empty()) c.format = "csv";
      if (c.mollify_delta > 0.0 && c.mollify_delta >= (c.dim == 1 ? delta_inradius<1>() : delta_inradius<2>())) {
        throw UsageError("--mollify-delta must be below the inradius of Delta^d");
      }
      c.output_path = shape_out;
      const auto result = c.dim == 1 ? detail::run_wulff_dim<1>(c) : detail::run_wulff_dim<2>(c);
      out << result.report;
      if (!shape_out.empty()) detail::emit(shape_out, result.shape_csv, out);
      return 0;
    }
    detail::emit(c.output_path, text, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wulffnt::cli
