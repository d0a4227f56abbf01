#pragma once

// Pants complex and dual curve complex of the two surfaces whose pants
// decompositions consist of a single curve: the 4-punctured sphere S_{0,4}
// (the pillowcase) and the once-punctured torus S_{1,1}. Vertices are slopes.

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bridgepants/farey.hpp"
#include "bridgepants/slope.hpp"

namespace bridgepants {

enum class SurfaceKind { FourPuncturedSphere, OncePuncturedTorus };
enum class ComplexKind { Pants, DualCurve };

std::string to_string(SurfaceKind s);
std::string to_string(ComplexKind c);

/// Geometric intersection number of the curves of slopes u and v:
/// |ad - bc| on S_{1,1}, 2 |ad - bc| on S_{0,4}.
std::int64_t intersection_number(SurfaceKind surface, const Slope& u, const Slope& v);

/// Distinct curves meeting minimally (once on S_{1,1}, twice on S_{0,4}).
bool is_pants_edge(SurfaceKind surface, const Slope& u, const Slope& v);

/// Any two distinct single-curve decompositions differ by one curve.
bool is_dual_curve_edge(SurfaceKind surface, const Slope& u, const Slope& v);

/// Finite window of a complex: every reduced slope with |p|, q <= bound,
/// plus 1/0. Vertices are ordered 1/0 first, then by increasing value.
class MetricGraphView {
 public:
  SurfaceKind surface() const { return surface_; }
  ComplexKind complex() const { return complex_; }
  std::int64_t bound() const { return bound_; }
  const std::vector<Slope>& vertices() const { return vertices_; }

  /// Throws DomainError if `s` is not a vertex.
  std::size_t index_of(const Slope& s) const;
  bool is_edge(std::size_t i, std::size_t j) const;

  /// Calls fn(i, j) for every edge with i < j, in lexicographic order,
  /// without materializing the edge list.
  template <class Fn>
  void for_each_edge(Fn&& fn) const;

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

 private:
  friend MetricGraphView bounded_view(SurfaceKind, ComplexKind, std::int64_t);
  MetricGraphView(SurfaceKind surface, ComplexKind complex, std::int64_t bound);

  std::vector<std::size_t> pants_neighbors_above(std::size_t i) const;

  SurfaceKind surface_;
  ComplexKind complex_;
  std::int64_t bound_;
  BoundedFareyGraph window_;
  std::vector<Slope> vertices_;
  std::unordered_map<Slope, std::size_t> index_;
};

/// Throws DomainError for bound < 1.
MetricGraphView bounded_view(SurfaceKind surface, ComplexKind complex, std::int64_t denominator_bound);

template <class Fn>
void MetricGraphView::for_each_edge(Fn&& fn) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (complex_ == ComplexKind::DualCurve) {
      for (std::size_t j = i + 1; j < n; ++j) fn(i, j);
    } else {
      for (std::size_t j : pants_neighbors_above(i)) fn(i, j);
    }
  }
}

}  // namespace bridgepants
