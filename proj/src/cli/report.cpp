#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

#include "bridgepants/cli.hpp"
#include "bridgepants/complexity.hpp"
#include "json.hpp"

namespace bridgepants::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view digits, std::int64_t& value) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

// Twelve significant digits keeps goldens stable well above the 1e-9
// tolerance used for volume comparisons.
double round_significant(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json interval(const VolumeBounds& b) {
  return Json::array({round_significant(b.lower), round_significant(b.upper)});
}

Json reported(const Reported<int>& r) { return r.value ? Json(*r.value) : Json(nullptr); }

Json build_report(const KnotQuery& query) {
  const auto text = trim(query.raw);
  const TwoBridgeKnot k = parse_knot(text);
  const auto wants = [&](Output o) { return query.outputs.contains(o); };

  Json r;
  Json reasons = Json::object();
  Json provenance = Json::object();
  r["input"] = std::string(text);
  r["normal_form"] = {{"p", k.p()}, {"q", k.q()}, {"mirrored", k.mirrored()}};

  if (wants(Output::Cf)) {
    if (k.is_unknot()) {
      r["cf"] = nullptr;
      reasons["cf"] = "the unknot has no continued fraction in (0, 1/2]";
    } else {
      const auto cf = continued_fraction(k);
      r["cf"] = Json(std::vector<std::int64_t>(cf.coefficients().begin(), cf.coefficients().end()));
    }
  }
  if (wants(Output::Twist)) {
    if (k.is_unknot()) {
      r["twist_number"] = nullptr;
      reasons["twist_number"] = "the unknot has no canonical rational tangle diagram";
    } else {
      r["twist_number"] = twist_number(k);
    }
  }
  if (wants(Output::Distance)) {
    r["pants_distance"] = pants_distance_02(k);
    r["dual_distance"] = dual_distance_02(k);
  }
  if (wants(Output::Complexity)) {
    const auto report = known_complexity(k.is_unknot() ? KnotDescription{Unknot{}} : KnotDescription{k});
    const auto& split = report.splittings.front();
    r["B_sigma"] = reported(split.complexity);
    r["BP_sigma_upper_bound"] = reported(report.pants_complexity_upper_bound);
    r["known_B"] = reported(report.knot_complexity);
    r["known_BP"] = reported(report.knot_pants_complexity);
    provenance["known_B"] = to_string(report.knot_complexity.provenance);
    provenance["known_BP"] = to_string(report.knot_pants_complexity.provenance);
    if (!report.knot_pants_complexity.value) {
      reasons["known_BP"] = "open: only the upper bound BP_sigma_upper_bound is determined";
    }
  }
  if (wants(Output::Cover)) {
    const auto lens = double_branched_cover(k);
    r["lens_space"] = {{"q", lens.q}, {"p", lens.p}};
  }
  if (wants(Output::Bounds)) {
    r["hyperbolic"] = is_hyperbolic(k);
    if (is_hyperbolic(k)) {
      Json bounds = Json::object();
      if (!query.via || *query.via == BoundSource::Twist) {
        bounds["twist"] = interval(bounds_for_knot(k, BoundSource::Twist));
      }
      if (!query.via || *query.via == BoundSource::Pants) {
        bounds["pants"] = interval(bounds_for_knot(k, BoundSource::Pants));
      }
      r["volume_bounds"] = std::move(bounds);
    } else {
      r["volume_bounds"] = nullptr;
      reasons["volume_bounds"] = NotHyperbolicError().what();
    }
  }
  if (!provenance.empty()) r["provenance"] = std::move(provenance);
  r["reasons"] = std::move(reasons);
  return r;
}

}  // namespace

TwoBridgeKnot parse_knot(std::string_view text) {
  text = trim(text);
  if (text == "unknot") return TwoBridgeKnot::unknot();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("expected p/q or 'unknot', got '" + std::string(text) + "'");
  }
  std::string_view num_text = text.substr(0, slash);
  const bool negative = !num_text.empty() && num_text.front() == '-';
  if (negative) num_text.remove_prefix(1);
  std::int64_t num = 0, den = 0;
  if (!parse_int(num_text, num) || !parse_int(text.substr(slash + 1), den)) {
    throw ParseError("expected p/q with integer p and q, got '" + std::string(text) + "'");
  }
  if (den == 0) throw ParseError("denominator must be non-zero in '" + std::string(text) + "'");
  const Slope s = Slope::reduce(negative ? -num : num, den);
  return normalize(s.num(), s.den());
}

std::string render_report(const KnotQuery& query, int indent) { return build_report(query).dump(indent); }

int run_batch(std::istream& in, std::ostream& out) {
  bool all_ok = true;
  std::string line;
  for (std::int64_t number = 1; std::getline(in, line); ++number) {
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    Json row;
    row["line"] = number;
    try {
      Json report = build_report(KnotQuery{std::string(text), kAllOutputs, std::nullopt});
      for (auto& [key, value] : report.items()) row[key] = std::move(value);
    } catch (const Error& e) {
      all_ok = false;
      row["input"] = std::string(text);
      row["error"] = e.what();
    }
    out << row.dump() << '\n';
  }
  if (in.bad()) throw ParseError("error while reading batch file");
  return all_ok ? kOk : kBatchLineFailed;
}

std::int64_t max_graph_bound() {
  const char* env = std::getenv(kMaxBoundEnv);
  if (env == nullptr) return kDefaultMaxBound;
  std::int64_t value = 0;
  if (!parse_int(trim(env), value) || value < 1) {
    throw ParseError(std::string(kMaxBoundEnv) + " must be a positive integer");
  }
  return value;
}

void write_graph(std::ostream& out, const MetricGraphView& view, GraphFormat format) {
  const auto& vertices = view.vertices();
  if (format == GraphFormat::Json) {
    out << "{\"vertices\":[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out << (i ? "," : "") << '"' << vertices[i] << '"';
    }
    out << "],\"edges\":[";
    bool first = true;
    view.for_each_edge([&](std::size_t i, std::size_t j) {
      out << (first ? "" : ",") << '[' << i << ',' << j << ']';
      first = false;
    });
    out << "]}\n";
    return;
  }
  out << "graph " << to_string(view.surface()) << '_' << to_string(view.complex()) << " {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << "  n" << i << " [label=\"" << vertices[i] << "\"];\n";
  }
  view.for_each_edge([&](std::size_t i, std::size_t j) { out << "  n" << i << " -- n" << j << ";\n"; });
  out << "}\n";
}

}  // namespace bridgepants::cli
