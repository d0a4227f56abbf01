#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "bridgepants/slope.hpp"
#include "bridgepants/twobridge.hpp"

namespace bridgepants::testing {

// Every reduced p/q with 0 < p/q <= 1/2 and q <= max_q.
inline std::vector<Slope> normal_range_slopes(std::int64_t max_q) {
  std::vector<Slope> out;
  for (std::int64_t q = 2; q <= max_q; ++q) {
    for (std::int64_t p = 1; 2 * p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(Slope::reduce(p, q));
    }
  }
  return out;
}

// Schubert normal forms (unmirrored) of all 2-bridge knots with 3 <= q <= max_q.
inline std::vector<TwoBridgeKnot> normal_form_knots(std::int64_t max_q) {
  std::vector<TwoBridgeKnot> out;
  for (std::int64_t q = 3; q <= max_q; q += 2) {
    for (std::int64_t p = 1; 2 * p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto k = normalize(p, q);
      if (k.p() == p && !k.mirrored()) out.push_back(k);
    }
  }
  return out;
}

// Every slope a/b with |a| <= bound, 1 <= b <= bound, plus 1/0.
inline std::vector<Slope> window_slopes(std::int64_t bound) {
  std::vector<Slope> out{Slope::infinity()};
  for (std::int64_t b = 1; b <= bound; ++b) {
    for (std::int64_t a = -bound; a <= bound; ++a) {
      if (std::gcd(a, b) == 1) out.push_back(Slope::reduce(a, b));
    }
  }
  return out;
}

}  // namespace bridgepants::testing
