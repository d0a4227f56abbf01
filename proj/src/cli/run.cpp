#include <algorithm>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "bridgepants/cli.hpp"
#include "report_schema.hpp"

namespace bridgepants::cli {

std::string_view report_schema() { return kReportSchema; }

namespace {

// CLI11 reads "-2/5" as an option. Negative slopes are moved behind a "--"
// separator at the end, where they bind to the subcommand's positional.
std::vector<std::string> protect_negative_slopes(const std::vector<std::string>& args) {
  static const std::regex negative_slope(R"(-\d+/\d+)");
  std::vector<std::string> out;
  std::vector<std::string> tail;
  for (const auto& a : args) {
    (std::regex_match(a, negative_slope) ? tail : out).push_back(a);
  }
  if (!tail.empty()) {
    out.push_back("--");
    out.insert(out.end(), tail.begin(), tail.end());
  }
  return out;
}

struct Options {
  bool quiet = false;
  bool schema = false;
  std::string slope;
  std::string via;
  std::string surface = "s04";
  std::string complex = "pants";
  std::int64_t bound = 1;
  std::string format = "json";
  std::string batch_path;
};

int report_error(std::ostream& err, const Options& opts, int code, const std::string& message) {
  if (!opts.quiet) err << "error: " << message << '\n';
  return code;
}

int emit_report(std::ostream& out, const std::string& slope, std::set<Output> outputs,
                std::optional<BoundSource> via = std::nullopt) {
  out << render_report(KnotQuery{slope, std::move(outputs), via}) << '\n';
  return kOk;
}

int run_graph(std::ostream& out, const Options& opts) {
  if (opts.bound < 1) throw ParseError("--bound must be positive");
  if (opts.bound > max_graph_bound()) return kBoundTooLarge;
  const auto surface =
      opts.surface == "s04" ? SurfaceKind::FourPuncturedSphere : SurfaceKind::OncePuncturedTorus;
  const auto complex = opts.complex == "pants" ? ComplexKind::Pants : ComplexKind::DualCurve;
  const auto format = opts.format == "dot" ? GraphFormat::Dot : GraphFormat::Json;
  write_graph(out, bounded_view(surface, complex, opts.bound), format);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of 2-bridge knots from Farey-graph data", "bridgepants"};
  Options opts;
  app.add_flag("--quiet", opts.quiet, "Suppress error messages");
  app.add_flag("--schema", opts.schema, "Print the JSON schema of reports and exit");
  app.require_subcommand(0, 1);

  auto* invariants = app.add_subcommand("invariants", "All invariants of K_{p/q}");
  auto* cf = app.add_subcommand("cf", "Canonical continued fraction of the normal form");
  auto* distance = app.add_subcommand("distance", "Pants and dual distances of the (0,2)-splitting");
  auto* bounds = app.add_subcommand("bounds", "Hyperbolic volume bounds");
  auto* cover = app.add_subcommand("cover", "Double branched cover");
  for (auto* sub : {invariants, cf, distance, bounds, cover}) {
    sub->add_option("slope", opts.slope, "p/q or 'unknot'")->required();
  }
  bounds->add_option("--via", opts.via, "Bound from twist number or pants distance")
      ->check(CLI::IsMember({"twist", "pants"}));

  auto* graph = app.add_subcommand("graph", "Export a bounded window of a curve complex");
  graph->add_option("--surface", opts.surface)->check(CLI::IsMember({"s04", "s11"}))->required();
  graph->add_option("--complex", opts.complex)->check(CLI::IsMember({"pants", "dual"}))->required();
  graph->add_option("--bound", opts.bound, "Largest |numerator| and denominator")->required();
  graph->add_option("--format", opts.format)->check(CLI::IsMember({"dot", "json"}))->required();

  auto* batch = app.add_subcommand("batch", "One JSON report per line of a file");
  batch->add_option("path", opts.batch_path)->required();

  try {
    auto argv = protect_negative_slopes(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    // --quiet may not be bound yet when parsing fails.
    std::ostringstream discard;
    const bool quiet = std::find(args.begin(), args.end(), "--quiet") != args.end();
    const int code = app.exit(e, out, quiet ? discard : err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (opts.schema) {
      out << report_schema();
      return kOk;
    }
    if (invariants->parsed()) return emit_report(out, opts.slope, kAllOutputs);
    if (cf->parsed()) return emit_report(out, opts.slope, {Output::NormalForm, Output::Cf});
    if (distance->parsed()) return emit_report(out, opts.slope, {Output::NormalForm, Output::Distance});
    if (cover->parsed()) return emit_report(out, opts.slope, {Output::NormalForm, Output::Cover});
    if (bounds->parsed()) {
      if (!is_hyperbolic(parse_knot(opts.slope))) throw NotHyperbolicError();
      std::optional<BoundSource> via;
      if (!opts.via.empty()) via = opts.via == "twist" ? BoundSource::Twist : BoundSource::Pants;
      return emit_report(out, opts.slope, {Output::NormalForm, Output::Bounds}, via);
    }
    if (graph->parsed()) {
      const int code = run_graph(out, opts);
      if (code == kBoundTooLarge) {
        return report_error(err, opts, code,
                            "bound " + std::to_string(opts.bound) + " exceeds the maximum " +
                                std::to_string(max_graph_bound()) + " (set " + kMaxBoundEnv + ")");
      }
      return code;
    }
    if (batch->parsed()) {
      std::ifstream in(opts.batch_path);
      if (!in) return report_error(err, opts, kParseError, "cannot read " + opts.batch_path);
      return run_batch(in, out);
    }
    out << app.help();
    return kParseError;
  } catch (const ParseError& e) {
    return report_error(err, opts, kParseError, e.what());
  } catch (const NotAKnotError& e) {
    return report_error(err, opts, kNotAKnot, e.what());
  } catch (const NotHyperbolicError& e) {
    return report_error(err, opts, kNotHyperbolic, e.what());
  } catch (const DomainError& e) {
    return report_error(err, opts, kParseError, e.what());
  } catch (const Error& e) {
    return report_error(err, opts, kBatchLineFailed, e.what());
  }
}

}  // namespace bridgepants::cli
