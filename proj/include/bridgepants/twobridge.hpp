#pragma once

// The 2-bridge knot K_{p/q} built from arcs of slope p/q on the pillowcase.
//
// K_{p/q} and K_{p'/q'} are isotopic iff q = q' and p' = p^{+-1} (mod q);
// K_{-p/q} is the mirror image of K_{p/q}.

#include <cstdint>
#include <vector>

#include "bridgepants/farey.hpp"
#include "bridgepants/slope.hpp"

namespace bridgepants {

/// A 2-bridge knot in Schubert normal form.
///
/// Represents K_{p/q} with 0 < p <= q/2 (q odd) when `mirrored()` is false,
/// and its mirror image K_{-p/q} when true. Amphichiral knots always carry
/// `mirrored() == false`. The unknot is the sentinel p = 0, q = 1.
class TwoBridgeKnot {
 public:
  static TwoBridgeKnot unknot() { return TwoBridgeKnot(0, 1, false); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool mirrored() const { return mirrored_; }
  bool is_unknot() const { return q_ == 1; }
  /// The normal-form slope p/q (0/1 for the unknot).
  Slope slope() const { return Slope::from_coprime(p_, q_); }

  friend bool operator==(const TwoBridgeKnot&, const TwoBridgeKnot&) = default;

 private:
  friend TwoBridgeKnot normalize(std::int64_t p, std::int64_t q);
  TwoBridgeKnot(std::int64_t p, std::int64_t q, bool mirrored) : p_(p), q_(q), mirrored_(mirrored) {}

  std::int64_t p_;
  std::int64_t q_;
  bool mirrored_;
};

/// Lens space L(q, p).
struct LensSpace {
  std::int64_t q;
  std::int64_t p;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

/// Canonical alternating rational tangle diagram D_{p,q}, closed with the
/// denominator closure: one twist region per continued-fraction coefficient.
struct TangleDiagram {
  std::vector<std::int64_t> twist_regions;
  std::int64_t crossing_count;
  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

/// Schubert normal form of K_{p/q}.
///
/// Among p, p^{-1}, -p, -p^{-1} (mod q) the least residue in (0, q/2] is
/// chosen; ties prefer an unmirrored representative. q = 1 yields the unknot.
/// Throws NotAKnotError for even q and DomainError for q < 1 or gcd(p, q) != 1.
TwoBridgeKnot normalize(std::int64_t p, std::int64_t q);

/// Normal form of the knot K_{s} for a slope s = p/q.
TwoBridgeKnot normalize(const Slope& s);

enum class Chirality { Sensitive, Ignore };

/// Isotopy of unoriented knots. With Chirality::Ignore a knot is also
/// equivalent to its mirror image.
bool is_equivalent(const TwoBridgeKnot& a, const TwoBridgeKnot& b,
                   Chirality chirality = Chirality::Sensitive);

TwoBridgeKnot mirror(const TwoBridgeKnot& k);

/// p^2 = -1 (mod q), i.e. K is isotopic to its mirror image.
bool is_amphichiral(const TwoBridgeKnot& k);

/// Throws DomainError for the unknot.
TangleDiagram tangle_diagram(const TwoBridgeKnot& k);

/// Number of twist regions of D_{p,q}: the length of the canonical continued
/// fraction. Throws DomainError for the unknot.
int twist_number(const TwoBridgeKnot& k);

/// L(q, p) for the normal form; L(1, 0) = S^3 for the unknot.
LensSpace double_branched_cover(const TwoBridgeKnot& k);

/// K = K_{2,q}, the (2, q) torus knot; equivalently normal form p = 1.
/// False for the unknot.
bool is_torus_two_bridge(const TwoBridgeKnot& k);

/// A 2-bridge knot is hyperbolic unless it is the unknot or a (2, q) torus knot.
bool is_hyperbolic(const TwoBridgeKnot& k);

/// Canonical continued fraction of the normal-form slope. Throws DomainError
/// for the unknot.
ContinuedFraction continued_fraction(const TwoBridgeKnot& k);

}  // namespace bridgepants
