#include "bridgepants/pantscomplex.hpp"

#include <algorithm>
#include <numeric>

#include "bridgepants/errors.hpp"

namespace bridgepants {

std::string to_string(SurfaceKind s) {
  return s == SurfaceKind::FourPuncturedSphere ? "S_0_4" : "S_1_1";
}

std::string to_string(ComplexKind c) { return c == ComplexKind::Pants ? "pants" : "dual_curve"; }

std::int64_t intersection_number(SurfaceKind surface, const Slope& u, const Slope& v) {
  const std::int64_t det = determinant(u, v);
  return surface == SurfaceKind::FourPuncturedSphere ? 2 * det : det;
}

bool is_pants_edge(SurfaceKind surface, const Slope& u, const Slope& v) {
  const std::int64_t minimal = surface == SurfaceKind::FourPuncturedSphere ? 2 : 1;
  return u != v && intersection_number(surface, u, v) == minimal;
}

bool is_dual_curve_edge(SurfaceKind, const Slope& u, const Slope& v) { return u != v; }

MetricGraphView::MetricGraphView(SurfaceKind surface, ComplexKind complex, std::int64_t bound)
    : surface_(surface), complex_(complex), bound_(bound), window_(bound) {
  vertices_.push_back(Slope::infinity());
  for (std::int64_t b = 1; b <= bound; ++b) {
    for (std::int64_t a = -bound; a <= bound; ++a) {
      if (std::gcd(a, b) == 1) vertices_.push_back(Slope::from_coprime(a, b));
    }
  }
  std::sort(vertices_.begin() + 1, vertices_.end(),
            [](const Slope& x, const Slope& y) { return x.value_compare(y) < 0; });
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
}

MetricGraphView bounded_view(SurfaceKind surface, ComplexKind complex, std::int64_t denominator_bound) {
  if (denominator_bound < 1) throw DomainError("denominator bound must be positive");
  return MetricGraphView(surface, complex, denominator_bound);
}

std::size_t MetricGraphView::index_of(const Slope& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) throw DomainError("slope " + s.to_string() + " is not in the view");
  return it->second;
}

bool MetricGraphView::is_edge(std::size_t i, std::size_t j) const {
  const Slope& u = vertices_.at(i);
  const Slope& v = vertices_.at(j);
  return complex_ == ComplexKind::Pants ? is_pants_edge(surface_, u, v)
                                        : is_dual_curve_edge(surface_, u, v);
}

std::vector<std::size_t> MetricGraphView::pants_neighbors_above(std::size_t i) const {
  // Both surfaces have the Farey graph as pants complex.
  std::vector<std::size_t> out;
  window_.for_each_neighbor(vertices_[i], [&](const Slope& n) {
    const std::size_t j = index_.at(n);
    if (j > i) out.push_back(j);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> MetricGraphView::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for_each_edge([&](std::size_t i, std::size_t j) { out.emplace_back(i, j); });
  return out;
}

std::size_t MetricGraphView::edge_count() const {
  if (complex_ == ComplexKind::DualCurve) return vertices_.size() * (vertices_.size() - 1) / 2;
  std::size_t n = 0;
  for_each_edge([&](std::size_t, std::size_t) { ++n; });
  return n;
}

}  // namespace bridgepants
