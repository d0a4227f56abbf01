#include "bridgepants/complexity.hpp"

#include <numeric>

#include "bridgepants/errors.hpp"

namespace bridgepants {

void SplittingSignature::validate() const {
  if (genus < 0) throw DomainError("splitting genus must be non-negative");
  if (bridges < 1) throw DomainError("bridge number must be positive");
  // A pants decomposition of the punctured bridge surface has 3g + 2b - 3 curves.
  if (3 * genus + 2 * bridges - 3 < 1) {
    throw DomainError("bridge surface carries no essential curves");
  }
}

int distance_lower_bound(const SplittingSignature& sig) {
  sig.validate();
  return sig.genus + sig.bridges - 1;
}

int complexity_from_distance(int distance, const SplittingSignature& sig) {
  if (distance < distance_lower_bound(sig)) {
    throw DomainError("distance " + std::to_string(distance) + " is below the lower bound g + b - 1 = " +
                      std::to_string(distance_lower_bound(sig)));
  }
  return distance - sig.genus - sig.bridges + 1;
}

int pants_distance_02(const TwoBridgeKnot& k) {
  // The two defining curves of the unknot's splitting meet twice: one pants move.
  if (k.is_unknot()) return 1;
  return farey_distance(k.slope());
}

int dual_distance_02(const TwoBridgeKnot&) { return 1; }

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::TwoBridgeClassification: return "two_bridge_classification";
    case Provenance::UnknotClassification: return "unknot_classification";
    case Provenance::TorusTwoBridgeCharacterization: return "torus_2n_characterization";
    case Provenance::TorusKnotTheorem: return "torus_knot_theorem";
    case Provenance::SplittingFixture: return "splitting_fixture";
    case Provenance::Open: return "open";
  }
  return "open";
}

namespace {

template <class T>
Reported<T> known(T value, Provenance p) {
  return {value, p};
}

SplittingComplexity two_bridge_splitting(const TwoBridgeKnot& k) {
  const int dual = dual_distance_02(k);
  const int pants = pants_distance_02(k);
  return {kTwoBridgeSplitting,
          known(dual, Provenance::Computed),
          known(pants, Provenance::Computed),
          known(complexity_from_distance(dual, kTwoBridgeSplitting), Provenance::Computed),
          known(complexity_from_distance(pants, kTwoBridgeSplitting), Provenance::Computed)};
}

ComplexityReport two_bridge_report(const TwoBridgeKnot& k) {
  ComplexityReport report;
  report.splittings.push_back(two_bridge_splitting(k));
  const auto& split = report.splittings.front();
  report.knot_complexity = known(0, Provenance::TwoBridgeClassification);
  report.pants_complexity_upper_bound = known(*split.pants_complexity.value, Provenance::Computed);
  if (k.is_unknot()) {
    report.knot_pants_complexity = known(0, Provenance::UnknotClassification);
  } else if (is_torus_two_bridge(k)) {
    report.knot_pants_complexity = known(1, Provenance::TorusTwoBridgeCharacterization);
  }
  return report;
}

SplittingComplexity fixture_splitting(SplittingSignature sig, int distance) {
  return {sig, known(distance, Provenance::SplittingFixture), {},
          known(complexity_from_distance(distance, sig), Provenance::SplittingFixture), {}};
}

ComplexityReport torus_report(const TorusKnot& t) {
  if (t.p < 2 || t.p >= t.q || std::gcd(t.p, t.q) != 1) {
    throw DomainError("torus knot parameters need 2 <= p < q with gcd(p, q) = 1");
  }
  if (t.p == 2) return two_bridge_report(normalize(1, t.q));

  ComplexityReport report;
  // The genus-one splitting with one bridge has D = 3 for every such torus knot.
  report.splittings.push_back(fixture_splitting({1, 1}, 3));
  if (t.p == 3 && t.q == 4) report.splittings.push_back(fixture_splitting({0, 3}, 5));
  report.knot_complexity = known(2, Provenance::TorusKnotTheorem);
  return report;
}

}  // namespace

ComplexityReport known_complexity(const KnotDescription& knot) {
  return std::visit(
      [](const auto& k) -> ComplexityReport {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Unknot>) {
          return two_bridge_report(TwoBridgeKnot::unknot());
        } else if constexpr (std::is_same_v<K, TwoBridgeKnot>) {
          return two_bridge_report(k);
        } else {
          return torus_report(k);
        }
      },
      knot);
}

}  // namespace bridgepants
