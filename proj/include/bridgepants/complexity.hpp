#pragma once

// Distances and normalized complexities of bridge splittings.
//
// For a (g, b)-bridge splitting with dual-curve distance D and pants distance
// D^P, the complexities are B = D - g - b + 1 and B^P = D^P - g - b + 1.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bridgepants/twobridge.hpp"

namespace bridgepants {

/// Genus g and bridge number b of a (g, b)-bridge splitting.
struct SplittingSignature {
  int genus;
  int bridges;

  /// Throws DomainError unless g >= 0, b >= 1 and 3g + 2b - 3 >= 1.
  void validate() const;
  friend bool operator==(const SplittingSignature&, const SplittingSignature&) = default;
};

inline constexpr SplittingSignature kTwoBridgeSplitting{0, 2};

/// D - g - b + 1. Throws DomainError if D < g + b - 1.
int complexity_from_distance(int distance, const SplittingSignature& sig);

/// g + b - 1, the least possible D or D^P.
int distance_lower_bound(const SplittingSignature& sig);

/// Pants distance of the (0,2)-splitting: the Farey distance from 1/0 to the
/// normal-form slope. The unknot gives 1.
int pants_distance_02(const TwoBridgeKnot& k);

/// Dual-curve distance of the (0,2)-splitting. Any two distinct curves on
/// the 4-punctured sphere are adjacent in the dual curve complex, so this is 1.
int dual_distance_02(const TwoBridgeKnot& k);

/// Where a reported value comes from.
enum class Provenance {
  Computed,                   // evaluated from Farey data in this library
  TwoBridgeClassification,    // B = 0 exactly for the unknot and 2-bridge knots
  UnknotClassification,       // B^P = 0 exactly for the unknot
  TorusTwoBridgeCharacterization,  // B^P = 1 exactly for K_{2,n}
  TorusKnotTheorem,           // B(K_{p,q}) = 2 for torus knots with 2 < p < q
  SplittingFixture,           // distance of a specific splitting, established by hand
  Open,                       // not determined
};

std::string to_string(Provenance p);

template <class T>
struct Reported {
  std::optional<T> value;
  Provenance provenance = Provenance::Open;
};

/// Distances and complexity of one particular splitting of a knot.
struct SplittingComplexity {
  SplittingSignature signature;
  Reported<int> distance;        // D(Sigma)
  Reported<int> pants_distance;  // D^P(Sigma)
  Reported<int> complexity;      // B(Sigma)
  Reported<int> pants_complexity;  // B^P(Sigma)
};

/// Splitting-level values together with the knot-level invariants B(K) and
/// B^P(K). Knot-level fields come only from closed-form classification
/// results; `pants_complexity_upper_bound` is B^P(Sigma) of the (0,2)-splitting,
/// which bounds B^P(K) from above.
struct ComplexityReport {
  std::vector<SplittingComplexity> splittings;
  Reported<int> knot_complexity;         // B(K)
  Reported<int> knot_pants_complexity;   // B^P(K)
  Reported<int> pants_complexity_upper_bound;
};

struct Unknot {};

/// Torus knot T(p, q) with 2 <= p < q and gcd(p, q) = 1.
struct TorusKnot {
  std::int64_t p;
  std::int64_t q;
};

using KnotDescription = std::variant<Unknot, TwoBridgeKnot, TorusKnot>;

/// Throws DomainError for torus parameters outside 2 <= p < q, gcd = 1.
ComplexityReport known_complexity(const KnotDescription& knot);

}  // namespace bridgepants
