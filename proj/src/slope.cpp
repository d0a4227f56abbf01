#include "bridgepants/slope.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

#include "bridgepants/errors.hpp"

namespace bridgepants {

Slope Slope::reduce(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) throw DomainError("0/0 is not a slope");
  if (den == 0) return infinity();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Slope(num / g, den / g);
}

Slope reduce(std::int64_t num, std::int64_t den) { return Slope::reduce(num, den); }

std::strong_ordering Slope::value_compare(const Slope& other) const {
  if (is_infinity() || other.is_infinity()) {
    return static_cast<int>(is_infinity()) <=> static_cast<int>(other.is_infinity());
  }
  // Denominators are positive, so cross-multiplication preserves order.
  return static_cast<__int128>(num_) * other.den_ <=> static_cast<__int128>(other.num_) * den_;
}

std::string Slope::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::int64_t determinant(const Slope& u, const Slope& v) {
  return std::llabs(u.num() * v.den() - u.den() * v.num());
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

}  // namespace bridgepants
