#include "bridgepants/volume.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bridgepants/complexity.hpp"
#include "bridgepants/errors.hpp"

namespace bridgepants {

namespace {

constexpr int kClausenTerms = 40;

// c_k = |B_2k| / (2k (2k+1)!) = 2 zeta(2k) / ((2 pi)^2k 2k (2k+1)).
std::array<double, kClausenTerms> clausen_coefficients() {
  std::array<double, kClausenTerms> c{};
  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = 1; k <= kClausenTerms; ++k) {
    const int n = 2 * k;
    double zeta = 0.0;
    if (k == 1) {
      zeta = std::numbers::pi * std::numbers::pi / 6.0;
    } else {
      for (int m = 1;; ++m) {
        const double term = std::pow(static_cast<double>(m), -n);
        zeta += term;
        if (term < 1e-18) break;
      }
    }
    c[k - 1] = 2.0 * zeta / (std::pow(two_pi, n) * n * (n + 1));
  }
  return c;
}

// Cl2(x) = sum sin(m x) / m^2 for |x| <= pi:
//   x - x log|x| + sum_k c_k x^(2k+1).
// With |x| <= pi the terms shrink by at least a factor 4 per step.
double clausen2(double x) {
  static const auto coeffs = clausen_coefficients();
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  double power = x * x2;
  double sum = x - x * std::log(std::abs(x));
  for (double c : coeffs) {
    const double term = c * power;
    sum += term;
    if (std::abs(term) < 1e-18) break;
    power *= x2;
  }
  return sum;
}

}  // namespace

double lobachevsky(double theta) {
  // Reduce to [-pi/2, pi/2] using pi-periodicity.
  const double pi = std::numbers::pi;
  double t = std::remainder(theta, pi);
  return 0.5 * clausen2(2.0 * t);
}

double v3() {
  static const double value = 3.0 * lobachevsky(std::numbers::pi / 3.0);
  return value;
}

std::string to_string(BoundSource s) { return s == BoundSource::Twist ? "twist" : "pants"; }

VolumeBounds bounds_from_twist(int twist_number) {
  if (twist_number < 2) {
    throw DomainError("a diagram with fewer than two twist regions is not of a hyperbolic knot");
  }
  const double v = v3();
  return {std::max(0.0, v * (twist_number - 2)), 10.0 * v * (twist_number - 1), BoundSource::Twist};
}

VolumeBounds bounds_from_pants(int pants_distance) {
  if (pants_distance < 2) throw DomainError("pants distance below 2 is impossible for a hyperbolic 2-bridge knot");
  const double v = v3();
  return {std::max(0.0, v * (pants_distance - 3)), 10.0 * v * (2 * pants_distance - 3),
          BoundSource::Pants};
}

VolumeBounds bounds_for_knot(const TwoBridgeKnot& k, BoundSource via) {
  if (!is_hyperbolic(k)) throw NotHyperbolicError();
  return via == BoundSource::Twist ? bounds_from_twist(twist_number(k))
                                   : bounds_from_pants(pants_distance_02(k));
}

}  // namespace bridgepants
