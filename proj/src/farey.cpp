#include "bridgepants/farey.hpp"

#include <numeric>
#include <sstream>
#include <unordered_set>

#include "bridgepants/errors.hpp"

namespace bridgepants {

namespace detail {

std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  if (old_r < 0) return {-old_x, -old_y};
  return {old_x, old_y};
}

}  // namespace detail

bool is_farey_edge(const Slope& u, const Slope& v) { return determinant(u, v) == 1; }

// ContinuedFraction ----------------------------------------------------------

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("continued fraction needs at least one coefficient");
  for (auto a : coefficients_) {
    if (a < 1) throw DomainError("continued fraction coefficients must be positive");
  }
}

bool ContinuedFraction::is_canonical() const {
  return coefficients_.back() >= 2 || coefficients_.size() == 1;
}

ContinuedFraction ContinuedFraction::canonical() const {
  if (is_canonical()) return *this;
  std::vector<std::int64_t> out(coefficients_.begin(), coefficients_.end() - 1);
  out.back() += 1;
  return ContinuedFraction(std::move(out));
}

std::string ContinuedFraction::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) os << ',';
    os << coefficients_[i];
  }
  os << ']';
  return os.str();
}

namespace {

bool in_normal_range(const Slope& s) {
  // 0 < p/q <= 1/2
  return !s.is_infinity() && s.num() > 0 && 2 * s.num() <= s.den();
}

std::int64_t checked_muladd(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0, sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum)) {
    throw DomainError("continued fraction value overflows 64-bit integers");
  }
  return sum;
}

// Convergents h_k / k_k of 1 / (a1 + 1 / (a2 + ...)), starting from 1/0, 0/1.
std::vector<Slope> convergents(const ContinuedFraction& cf) {
  std::vector<Slope> out{Slope::infinity(), Slope::zero()};
  std::int64_t h_prev = 1, h = 0;
  std::int64_t k_prev = 0, k = 1;
  for (auto a : cf.coefficients()) {
    const std::int64_t h_next = checked_muladd(a, h, h_prev);
    const std::int64_t k_next = checked_muladd(a, k, k_prev);
    h_prev = std::exchange(h, h_next);
    k_prev = std::exchange(k, k_next);
    out.push_back(Slope::from_coprime(h, k));
  }
  return out;
}

}  // namespace

ContinuedFraction cf_expand(const Slope& s) {
  if (!in_normal_range(s)) {
    throw DomainError("cf_expand: slope " + s.to_string() + " is outside (0, 1/2]");
  }
  std::vector<std::int64_t> coeffs;
  std::int64_t num = s.den();
  std::int64_t den = s.num();
  while (den != 0) {
    coeffs.push_back(num / den);
    num = std::exchange(den, num % den);
  }
  return ContinuedFraction(std::move(coeffs));
}

Slope cf_value(const ContinuedFraction& cf) { return convergents(cf).back(); }

// FareyPath ------------------------------------------------------------------

FareyPath::FareyPath(std::vector<Slope> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a Farey path needs at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!is_farey_edge(vertices_[i - 1], vertices_[i])) {
      throw DomainError("not a Farey edge: " + vertices_[i - 1].to_string() + " -- " +
                        vertices_[i].to_string());
    }
  }
  std::unordered_set<Slope> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw DomainError("Farey path repeats a vertex");
}

std::string FareyPath::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ", ";
    os << vertices_[i];
  }
  os << ')';
  return os.str();
}

FareyPath truncation_path(const ContinuedFraction& cf) { return FareyPath(convergents(cf)); }

// BoundedFareyGraph ----------------------------------------------------------

BoundedFareyGraph::BoundedFareyGraph(std::int64_t bound) : bound_(bound) {
  if (bound < 1) throw DomainError("denominator bound must be positive");
}

bool BoundedFareyGraph::contains(const Slope& s) const {
  if (s.is_infinity()) return true;
  return s.den() <= bound_ && s.num() >= -bound_ && s.num() <= bound_;
}

std::size_t BoundedFareyGraph::vertex_count() const {
  std::size_t n = 1;
  for (std::int64_t b = 1; b <= bound_; ++b) {
    for (std::int64_t a = -bound_; a <= bound_; ++a) {
      if (std::gcd(a, b) == 1) ++n;
    }
  }
  return n;
}

std::size_t BoundedFareyGraph::index_of(const Slope& s) const {
  return static_cast<std::size_t>(s.num() + bound_) * static_cast<std::size_t>(bound_ + 1) +
         static_cast<std::size_t>(s.den());
}

Slope BoundedFareyGraph::slope_at(std::size_t index) const {
  const auto stride = static_cast<std::size_t>(bound_ + 1);
  return Slope::from_coprime(static_cast<std::int64_t>(index / stride) - bound_,
                             static_cast<std::int64_t>(index % stride));
}

// FareySearch ----------------------------------------------------------------

FareySearch::FareySearch(const BoundedFareyGraph& graph, const Slope& source,
                         std::optional<Slope> stop_at)
    : graph_(&graph), source_(source), dist_(graph.index_space(), -1) {
  if (!graph.contains(source)) throw DomainError("search source outside the window");
  std::vector<std::size_t> frontier{graph.index_of(source)};
  dist_[frontier.front()] = 0;
  if (stop_at && *stop_at == source) return;
  std::optional<std::size_t> stop_index;
  if (stop_at && graph.contains(*stop_at)) stop_index = graph.index_of(*stop_at);

  std::vector<std::size_t> next;
  for (std::int32_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (auto idx : frontier) {
      graph.for_each_neighbor(graph.slope_at(idx), [&](const Slope& n) {
        const auto j = graph.index_of(n);
        if (dist_[j] >= 0) return;
        dist_[j] = level;
        next.push_back(j);
      });
      if (stop_index && dist_[*stop_index] >= 0) return;
    }
    frontier.swap(next);
  }
}

std::optional<int> FareySearch::distance(const Slope& target) const {
  if (!graph_->contains(target)) return std::nullopt;
  const auto d = dist_[graph_->index_of(target)];
  if (d < 0) return std::nullopt;
  return d;
}

FareyPath FareySearch::shortest_path(const Slope& target) const {
  const auto total = distance(target);
  if (!total) throw DomainError("slope " + target.to_string() + " not reached by the search");

  const BoundedFareyGraph& g = *graph_;
  // Mark every vertex lying on some shortest path to `target`.
  std::vector<char> on_geodesic(g.index_space(), 0);
  std::vector<std::size_t> layer{g.index_of(target)};
  on_geodesic[layer.front()] = 1;
  std::vector<std::size_t> below;
  for (int level = *total; level > 0; --level) {
    below.clear();
    for (auto idx : layer) {
      g.for_each_neighbor(g.slope_at(idx), [&](const Slope& n) {
        const auto j = g.index_of(n);
        if (dist_[j] == level - 1 && !on_geodesic[j]) {
          on_geodesic[j] = 1;
          below.push_back(j);
        }
      });
    }
    layer.swap(below);
  }

  std::vector<Slope> path{source_};
  for (int level = 1; level <= *total; ++level) {
    std::optional<Slope> best;
    g.for_each_neighbor(path.back(), [&](const Slope& n) {
      const auto j = g.index_of(n);
      if (!on_geodesic[j] || dist_[j] != level) return;
      if (!best || key_compare(n, *best) < 0) best = n;
    });
    if (!best) throw InternalError("geodesic reconstruction lost the path");
    path.push_back(*best);
  }
  return FareyPath(std::move(path));
}

// Distance from 1/0 ----------------------------------------------------------

namespace {

void require_distance_domain(const Slope& target) {
  if (target.is_infinity() || target == Slope::zero() || in_normal_range(target)) return;
  throw DomainError("slope " + target.to_string() + " is outside (0, 1/2] and not 0/1 or 1/0");
}

std::int64_t window_for(const Slope& target) { return std::max<std::int64_t>(1, 2 * target.den()); }

int stable_distance(const Slope& target, const FareySearch& primary) {
  const int d = *primary.distance(target);
  const BoundedFareyGraph wide(2 * window_for(target));
  const FareySearch check(wide, Slope::infinity(), target);
  if (check.distance(target) != d) {
    throw InternalError("Farey distance to " + target.to_string() +
                        " changed when the search window was doubled");
  }
  return d;
}

}  // namespace

int farey_distance(const Slope& target) {
  require_distance_domain(target);
  const BoundedFareyGraph graph(window_for(target));
  const FareySearch search(graph, Slope::infinity(), target);
  return stable_distance(target, search);
}

FareyPath geodesic(const Slope& target) {
  require_distance_domain(target);
  const BoundedFareyGraph graph(window_for(target));
  const FareySearch search(graph, Slope::infinity(), target);
  stable_distance(target, search);
  return search.shortest_path(target);
}

}  // namespace bridgepants
