// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. A criterion also fails when it exceeds its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bridgepants/cli.hpp"
#include "bridgepants/complexity.hpp"
#include "bridgepants/errors.hpp"
#include "bridgepants/farey.hpp"
#include "bridgepants/pantscomplex.hpp"
#include "bridgepants/twobridge.hpp"
#include "bridgepants/volume.hpp"
#include "support/line_crossing.hpp"
#include "support/sweep.hpp"

namespace bp = bridgepants;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

std::string str(const bp::Slope& s) { return s.to_string(); }

bp::Slope S(std::int64_t p, std::int64_t q) { return bp::Slope::reduce(p, q); }

void worked_example_2_5(Check& c) {
  c.expect(bp::cf_expand(S(2, 5)).to_string() == "[2,2]", "cf_expand(2/5)");
  const bp::FareyPath expected({S(1, 0), S(0, 1), S(1, 2), S(2, 5)});
  c.expect(bp::geodesic(S(2, 5)) == expected, "geodesic(2/5) = " + bp::geodesic(S(2, 5)).to_string());
  c.expect(bp::pants_distance_02(bp::normalize(2, 5)) == 3, "pants_distance_02(K_2/5)");
}

void worked_example_3_11(Check& c) {
  const auto cf = bp::cf_expand(S(3, 11));
  c.expect(cf.to_string() == "[3,1,2]", "cf_expand(3/11) = " + cf.to_string());
  c.expect(bp::truncation_path(cf).edge_count() == 4, "truncation path edge count");
  c.expect(bp::farey_distance(S(3, 11)) == 3, "farey_distance(3/11)");
  const int d22 = bp::bfs_distance_oracle(bp::Slope::infinity(), S(3, 11), 22);
  const int d44 = bp::bfs_distance_oracle(bp::Slope::infinity(), S(3, 11), 44);
  c.expect(d22 == 3 && d44 == 3, "oracle at bounds 22/44: " + std::to_string(d22) + "/" + std::to_string(d44));
}

void oracle_sweep(Check& c) {
  for (const auto& s : bp::testing::normal_range_slopes(50)) {
    const int d = bp::farey_distance(s);
    const int near = bp::bfs_distance_oracle(bp::Slope::infinity(), s, 2 * s.den());
    const int far = bp::bfs_distance_oracle(bp::Slope::infinity(), s, 4 * s.den());
    c.expect(d == near && near == far, "distance mismatch at " + str(s));
    const auto n = static_cast<int>(bp::cf_expand(s).size());
    c.expect(n <= 2 * (d - 1) && d - 1 <= n, "n/2 <= D-1 <= n fails at " + str(s));
  }
}

void dual_distance_sweep(Check& c) {
  for (const auto& k : bp::testing::normal_form_knots(101)) {
    const int d = bp::dual_distance_02(k);
    c.expect(d == 1, "dual distance at " + str(k.slope()));
    c.expect(bp::complexity_from_distance(d, bp::kTwoBridgeSplitting) == 0, "B at " + str(k.slope()));
  }
}

void torus_characterization(Check& c) {
  for (const auto& k : bp::testing::normal_form_knots(101)) {
    const int bp_sigma = bp::complexity_from_distance(bp::pants_distance_02(k), bp::kTwoBridgeSplitting);
    if (k.p() == 1) {
      c.expect(bp_sigma == 1, "B^P != 1 at " + str(k.slope()));
    } else {
      c.expect(bp_sigma >= 2, "B^P < 2 at " + str(k.slope()));
    }
  }
}

void torus_fixtures(Check& c) {
  c.expect(bp::complexity_from_distance(5, {0, 3}) == 3, "B for D = 5, (0,3)");
  c.expect(bp::complexity_from_distance(3, {1, 1}) == 2, "B for D = 3, (1,1)");
  c.expect(bp::known_complexity(bp::TorusKnot{3, 4}).knot_complexity.value == 2, "B(K_3,4)");
}

void lobachevsky_values(Check& c) {
  const double a = 3.0 * bp::lobachevsky(kPi / 3);
  const double b = 2.0 * bp::lobachevsky(kPi / 6);
  c.expect(std::abs(a - b) < 1e-9, "3L(pi/3) vs 2L(pi/6)");
  c.expect(std::abs(bp::v3() - a) < 1e-9, "v3 vs 3L(pi/3)");
  c.expect(std::abs(bp::v3() - 1.0149416064) < 1e-7, "v3 value");
  for (double theta : {0.0, kPi / 2, kPi}) {
    c.expect(std::abs(bp::lobachevsky(theta)) < 1e-10, "zero at " + std::to_string(theta));
  }
}

void volume_bracket(Check& c) {
  const double figure_eight = 2.0 * bp::v3();
  const auto k = bp::normalize(2, 5);
  c.expect(bp::pants_distance_02(k) == 3 && bp::twist_number(k) == 2, "figure-eight D^P and tw");
  c.expect(bp::bounds_from_pants(3).contains(figure_eight), "2v3 in [0, 30v3)");
  c.expect(bp::bounds_from_twist(2).contains(figure_eight), "2v3 in [0, 10v3)");
  for (const auto& knot : bp::testing::normal_form_knots(101)) {
    if (!bp::is_hyperbolic(knot)) continue;
    // Compare as integer multiples of v3 so containment is exact.
    const int tw = bp::twist_number(knot);
    const int dp = bp::pants_distance_02(knot);
    const bool contained = std::max(0, dp - 3) <= std::max(0, tw - 2) && tw - 1 <= 2 * dp - 3;
    c.expect(contained, "twist interval not inside pants interval at " + str(knot.slope()));
    const auto t = bp::bounds_for_knot(knot, bp::BoundSource::Twist);
    const auto p = bp::bounds_for_knot(knot, bp::BoundSource::Pants);
    c.expect(p.lower <= t.lower && t.upper <= p.upper, "floating containment at " + str(knot.slope()));
  }
}

void schubert_classification(Check& c) {
  for (std::int64_t q = 1; q <= 101; q += 2) {
    std::vector<bp::TwoBridgeKnot> knots;
    std::vector<std::int64_t> residues;
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      knots.push_back(bp::normalize(p, q));
      residues.push_back(p);
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
      const auto& k = knots[i];
      const auto again = bp::normalize(k.mirrored() ? -k.p() : k.p(), k.q());
      c.expect(again == k, "normalize not idempotent at " + std::to_string(residues[i]) + "/" + std::to_string(q));
      c.expect(bp::mirror(bp::mirror(k)) == k, "mirror not an involution at " + str(k.slope()));
      const bool criterion = (k.p() * k.p() + 1) % q == 0;
      c.expect(bp::is_amphichiral(k) == criterion, "amphichirality at q = " + std::to_string(q));
      c.expect(bp::is_amphichiral(k) == bp::is_equivalent(k, bp::mirror(k)), "amphichiral vs mirror");
      c.expect(bp::is_equivalent(k, k), "reflexivity");
      for (std::size_t j = 0; j < knots.size(); ++j) {
        const bool eq = bp::is_equivalent(knots[i], knots[j]);
        c.expect(eq == bp::is_equivalent(knots[j], knots[i]), "symmetry");
        const std::int64_t a = residues[i], b = residues[j];
        const bool schubert = a == b || (a * b) % q == 1 % q;
        c.expect(eq == schubert, "classification at " + std::to_string(a) + ", " + std::to_string(b) +
                                     " mod " + std::to_string(q));
      }
    }
    // Transitivity, checked over all triples.
    const std::size_t n = knots.size();
    std::vector<char> rel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = bp::is_equivalent(knots[i], knots[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (rel[j * n + k] && !rel[i * n + k]) c.expect(false, "transitivity at q = " + std::to_string(q));
        }
      }
    }
  }
}

void intersection_oracle(Check& c) {
  using bp::SurfaceKind;
  const auto slopes = bp::testing::window_slopes(12);
  for (const auto& u : slopes) {
    for (const auto& v : slopes) {
      const auto torus = bp::testing::line_crossings(SurfaceKind::OncePuncturedTorus, u, v);
      const auto sphere = bp::testing::line_crossings(SurfaceKind::FourPuncturedSphere, u, v);
      c.expect(bp::intersection_number(SurfaceKind::OncePuncturedTorus, u, v) == torus,
               "S_1_1 at " + str(u) + ", " + str(v));
      c.expect(bp::intersection_number(SurfaceKind::FourPuncturedSphere, u, v) == sphere,
               "S_0_4 at " + str(u) + ", " + str(v));
      c.expect(sphere == 2 * torus, "S_0_4 != 2 S_1_1 at " + str(u) + ", " + str(v));
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void cli_goldens(Check& c) {
  const std::string dir = BRIDGEPANTS_GOLDEN_DIR;
  auto golden = [&](const std::vector<std::string>& args, const std::string& file) {
    std::ostringstream out, err;
    const int code = bp::cli::run(args, out, err);
    c.expect(code == 0, file + ": exit code " + std::to_string(code));
    const auto expected = read_file(dir + "/" + file);
    c.expect(!expected.empty() && out.str() == expected, file + ": output differs");
  };
  golden({"invariants", "2/5"}, "invariants_2_5.json");
  golden({"graph", "--surface", "s04", "--complex", "dual", "--bound", "1", "--format", "json"},
         "graph_s04_dual_1.json");
  golden({"batch", dir + "/batch_3.txt"}, "batch_3.jsonl");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example 2/5", 1, worked_example_2_5},
      {2, "worked example 3/11 with oracle certification", 1, worked_example_3_11},
      {3, "distance equals BFS oracle and CF-length inequality, q <= 50", 60, oracle_sweep},
      {4, "dual distance 1 and B = 0 for all normal forms, q <= 101", 5, dual_distance_sweep},
      {5, "B^P = 1 exactly on 1/n, otherwise >= 2, q <= 101", 10, torus_characterization},
      {6, "torus knot fixture arithmetic", 1, torus_fixtures},
      {7, "v3 and Lobachevsky zeros", 1, lobachevsky_values},
      {8, "figure-eight bracket and interval containment, q <= 101", 10, volume_bracket},
      {9, "Schubert classification, odd q <= 101", 30, schubert_classification},
      {10, "intersection numbers match line crossings, |p|, q <= 12", 30, intersection_oracle},
      {11, "CLI goldens", 1, cli_goldens},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      check.failures.push_back("took " + std::to_string(elapsed) + " s, budget " +
                               std::to_string(criterion.budget_seconds) + " s");
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("[%s] %2d  %s  (%.3f s)\n", ok ? "PASS" : "FAIL", criterion.id, criterion.title, elapsed);
    for (const auto& f : check.failures) std::printf("        %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
