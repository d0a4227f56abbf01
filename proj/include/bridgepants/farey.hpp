#pragma once

// The Farey graph: vertices are slopes, a/b and c/d are adjacent when
// |ad - bc| = 1. It is the pants complex of the 4-punctured sphere (and of
// the once-punctured torus).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridgepants/slope.hpp"

namespace bridgepants {

bool is_farey_edge(const Slope& u, const Slope& v);

/// Positive continued fraction [a1, ..., an] = 1 / (a1 + 1 / (a2 + ... + 1 / an)).
class ContinuedFraction {
 public:
  /// Throws DomainError if `coefficients` is empty or has a non-positive entry.
  explicit ContinuedFraction(std::vector<std::int64_t> coefficients);

  std::span<const std::int64_t> coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  std::int64_t operator[](std::size_t i) const { return coefficients_[i]; }

  /// Canonical form has a_n >= 2 unless the whole expansion is [1].
  bool is_canonical() const;
  /// Rewrites a trailing [..., a, 1] as [..., a + 1].
  ContinuedFraction canonical() const;

  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// Canonical expansion of a slope in (0, 1/2]. Throws DomainError otherwise.
ContinuedFraction cf_expand(const Slope& s);

/// Exact value of a continued fraction.
Slope cf_value(const ContinuedFraction& cf);

/// A walk in the Farey graph with distinct vertices and unimodular steps.
class FareyPath {
 public:
  /// Throws DomainError if the vertex sequence violates the path invariants.
  explicit FareyPath(std::vector<Slope> vertices);

  std::span<const Slope> vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  const Slope& front() const { return vertices_.front(); }
  const Slope& back() const { return vertices_.back(); }

  std::string to_string() const;

  friend bool operator==(const FareyPath&, const FareyPath&) = default;

 private:
  std::vector<Slope> vertices_;
};

/// The path 1/0, 0/1, [a1], [a1, a2], ..., [a1, ..., an] of successive
/// truncations.
FareyPath truncation_path(const ContinuedFraction& cf);

/// Geodesic distance from 1/0 to `target` in the Farey graph.
///
/// `target` must lie in (0, 1/2] or be 0/1 or 1/0. The distance is found by
/// breadth-first search in the window of slopes with |p|, q <= 2 * den(target)
/// and checked to be unchanged when the window is doubled; an unstable result
/// raises InternalError.
int farey_distance(const Slope& target);

/// A shortest path from 1/0 to `target`; among all shortest paths the one
/// whose vertex sequence is lexicographically least under (den, num).
FareyPath geodesic(const Slope& target);

/// The Farey graph restricted to slopes a/b with |a| <= bound and b <= bound,
/// together with 1/0.
class BoundedFareyGraph {
 public:
  explicit BoundedFareyGraph(std::int64_t bound);

  std::int64_t bound() const { return bound_; }
  bool contains(const Slope& s) const;
  std::size_t vertex_count() const;

  /// Dense index in [0, index_space()) for a contained slope.
  std::size_t index_of(const Slope& s) const;
  std::size_t index_space() const { return static_cast<std::size_t>(2 * bound_ + 1) * (bound_ + 1); }
  Slope slope_at(std::size_t index) const;

  /// Calls fn(Slope) for every neighbour of `s` inside the window. Neighbours
  /// come from the unimodular solutions (c0 + k a, d0 + k b) of ad - bc = 1.
  template <class Fn>
  void for_each_neighbor(const Slope& s, Fn&& fn) const;

 private:
  std::int64_t bound_;
};

/// Breadth-first search from a source slope inside a BoundedFareyGraph.
///
/// With `stop_at` set, the search halts as soon as that slope is reached;
/// distances are then complete only up to its level.
class FareySearch {
 public:
  FareySearch(const BoundedFareyGraph& graph, const Slope& source,
              std::optional<Slope> stop_at = std::nullopt);

  const Slope& source() const { return source_; }
  /// std::nullopt when `target` is outside the window or unreached.
  std::optional<int> distance(const Slope& target) const;
  /// Lexicographically least shortest path from the source to `target`.
  /// Throws DomainError when `target` was not reached.
  FareyPath shortest_path(const Slope& target) const;

 private:
  const BoundedFareyGraph* graph_;
  Slope source_;
  std::vector<std::int32_t> dist_;
};

/// Reference breadth-first search used to certify farey_distance.
///
/// Shares no code with BoundedFareyGraph: neighbours are found by scanning
/// every admissible denominator and testing divisibility. Throws DomainError
/// if either endpoint is outside the window.
int bfs_distance_oracle(const Slope& src, const Slope& dst, std::int64_t denominator_bound);

/// Distances from `src` to every slope of the window, computed the same way as
/// bfs_distance_oracle. Slopes outside the window or unreachable are absent.
std::vector<std::pair<Slope, int>> bfs_oracle_distances(const Slope& src,
                                                        std::int64_t denominator_bound);

// ---------------------------------------------------------------------------

namespace detail {
// Returns (x, y) with a x + b y = gcd(a, b).
std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b);
}  // namespace detail

template <class Fn>
void BoundedFareyGraph::for_each_neighbor(const Slope& s, Fn&& fn) const {
  const std::int64_t a = s.num();
  const std::int64_t b = s.den();
  if (b == 0) {
    for (std::int64_t c = -bound_; c <= bound_; ++c) fn(Slope::from_coprime(c, 1));
    return;
  }
  // a d0 - b c0 = 1
  auto [x, y] = detail::extended_gcd(a, b);
  const std::int64_t d0 = x;
  const std::int64_t c0 = -y;
  // d = d0 + k b must lie in [-bound, bound]
  auto floor_div = [](std::int64_t n, std::int64_t m) {
    std::int64_t q = n / m;
    return (n % m != 0 && ((n < 0) != (m < 0))) ? q - 1 : q;
  };
  const std::int64_t k_lo = -floor_div(bound_ + d0, b);
  const std::int64_t k_hi = floor_div(bound_ - d0, b);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    std::int64_t c = c0 + k * a;
    std::int64_t d = d0 + k * b;
    if (d < 0) {
      c = -c;
      d = -d;
    }
    if (d == 0) {
      fn(Slope::infinity());
      continue;
    }
    if (c < -bound_ || c > bound_) continue;
    fn(Slope::from_coprime(c, d));
  }
}

}  // namespace bridgepants
