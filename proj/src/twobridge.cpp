#include "bridgepants/twobridge.hpp"

#include <numeric>
#include <optional>

#include "bridgepants/errors.hpp"

namespace bridgepants {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  auto [x, y] = detail::extended_gcd(mod(a, m), m);
  return mod(x, m);
}

void require_knot(const TwoBridgeKnot& k, const char* what) {
  if (k.is_unknot()) throw DomainError(std::string(what) + " is undefined for the unknot");
}

}  // namespace

TwoBridgeKnot normalize(std::int64_t p, std::int64_t q) {
  if (q < 1) throw DomainError("q must be positive");
  if (q % 2 == 0) throw NotAKnotError();
  if (std::gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  if (q == 1) return TwoBridgeKnot::unknot();

  const std::int64_t r = mod(p, q);
  const std::int64_t r_inv = mod_inverse(r, q);
  struct Candidate {
    std::int64_t value;
    bool mirrored;
  };
  // Unmirrored candidates first so that ties keep mirrored = false.
  const Candidate candidates[] = {{r, false}, {r_inv, false}, {q - r, true}, {q - r_inv, true}};
  std::optional<Candidate> best;
  for (const auto& c : candidates) {
    if (2 * c.value > q) continue;
    if (!best || c.value < best->value) best = c;
  }
  // One of r, q - r always lies in (0, q/2].
  return TwoBridgeKnot(best->value, q, best->mirrored);
}

TwoBridgeKnot normalize(const Slope& s) {
  if (s.is_infinity()) throw NotAKnotError();
  return normalize(s.num(), s.den());
}

bool is_equivalent(const TwoBridgeKnot& a, const TwoBridgeKnot& b, Chirality chirality) {
  // Re-normalize so that hand-built or stale values compare canonically.
  const auto na = normalize(a.mirrored() ? -a.p() : a.p(), a.q());
  const auto nb = normalize(b.mirrored() ? -b.p() : b.p(), b.q());
  if (na.q() != nb.q() || na.p() != nb.p()) return false;
  return chirality == Chirality::Ignore || na.mirrored() == nb.mirrored();
}

TwoBridgeKnot mirror(const TwoBridgeKnot& k) {
  if (k.is_unknot()) return k;
  return normalize(k.mirrored() ? k.p() : -k.p(), k.q());
}

bool is_amphichiral(const TwoBridgeKnot& k) {
  return mod(k.p() * k.p() + 1, k.q()) == 0;
}

ContinuedFraction continued_fraction(const TwoBridgeKnot& k) {
  require_knot(k, "continued fraction");
  return cf_expand(k.slope());
}

TangleDiagram tangle_diagram(const TwoBridgeKnot& k) {
  require_knot(k, "tangle diagram");
  const auto cf = continued_fraction(k);
  std::vector<std::int64_t> regions(cf.coefficients().begin(), cf.coefficients().end());
  const std::int64_t crossings = std::accumulate(regions.begin(), regions.end(), std::int64_t{0});
  return {std::move(regions), crossings};
}

int twist_number(const TwoBridgeKnot& k) {
  require_knot(k, "twist number");
  return static_cast<int>(continued_fraction(k).size());
}

LensSpace double_branched_cover(const TwoBridgeKnot& k) {
  if (k.is_unknot()) return {1, 0};
  return {k.q(), k.p()};
}

bool is_torus_two_bridge(const TwoBridgeKnot& k) { return !k.is_unknot() && k.p() == 1; }

bool is_hyperbolic(const TwoBridgeKnot& k) { return !k.is_unknot() && k.p() != 1; }

}  // namespace bridgepants
