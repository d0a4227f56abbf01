#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace bridgepants {

/// A reduced extended rational p/q.
///
/// Slopes are the vertices of the Farey graph and label isotopy classes of
/// essential simple closed curves on the pillowcase. The representation is
/// canonical: gcd(|p|, q) = 1, q >= 0, the sign lives in the numerator, zero
/// is 0/1 and infinity is 1/0.
class Slope {
 public:
  /// Reduces num/den to canonical form. Throws DomainError on 0/0.
  static Slope reduce(std::int64_t num, std::int64_t den);
  /// Skips the gcd; the caller guarantees gcd(|num|, den) = 1 and den > 0,
  /// or (num, den) = (1, 0).
  static constexpr Slope from_coprime(std::int64_t num, std::int64_t den) { return Slope(num, den); }
  static constexpr Slope infinity() { return Slope(1, 0); }
  static constexpr Slope zero() { return Slope(0, 1); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_infinity() const { return den_ == 0; }

  /// Exact comparison of rational values; infinity is greater than every
  /// finite slope.
  std::strong_ordering value_compare(const Slope& other) const;

  std::string to_string() const;

  friend constexpr bool operator==(const Slope&, const Slope&) = default;

 private:
  constexpr Slope(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_;
  std::int64_t den_;
};

/// Free-function form of Slope::reduce.
Slope reduce(std::int64_t num, std::int64_t den);

/// |ad - bc| for u = a/b, v = c/d.
std::int64_t determinant(const Slope& u, const Slope& v);

/// Ordering key used for deterministic tie-breaks: (denominator, numerator).
constexpr std::strong_ordering key_compare(const Slope& a, const Slope& b) {
  if (auto c = a.den() <=> b.den(); c != 0) return c;
  return a.num() <=> b.num();
}

std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace bridgepants

template <>
struct std::hash<bridgepants::Slope> {
  std::size_t operator()(const bridgepants::Slope& s) const noexcept {
    auto h = std::hash<std::int64_t>{}(s.num());
    return h ^ (std::hash<std::int64_t>{}(s.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
