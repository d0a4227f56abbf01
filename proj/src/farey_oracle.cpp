#include <deque>
#include <unordered_map>

#include "bridgepants/errors.hpp"
#include "bridgepants/farey.hpp"

namespace bridgepants {

namespace {

bool in_window(const Slope& s, std::int64_t bound) {
  return s.is_infinity() || (s.den() <= bound && s.num() >= -bound && s.num() <= bound);
}

// Every slope c/d in the window with a d - b c = +-1, found by trying each
// denominator d in turn.
template <class Fn>
void scan_neighbors(const Slope& s, std::int64_t bound, Fn&& fn) {
  const std::int64_t a = s.num();
  const std::int64_t b = s.den();
  if (b == 0) {
    for (std::int64_t c = -bound; c <= bound; ++c) fn(Slope::reduce(c, 1));
    return;
  }
  for (std::int64_t d = 0; d <= bound; ++d) {
    for (std::int64_t sign : {-1, 1}) {
      const std::int64_t rhs = a * d - sign;  // b c = a d - sign
      if (rhs % b != 0) continue;
      const std::int64_t c = rhs / b;
      if (d == 0) {
        fn(Slope::infinity());
        continue;
      }
      if (c < -bound || c > bound) continue;
      fn(Slope::reduce(c, d));
    }
  }
}

std::unordered_map<Slope, int> run_bfs(const Slope& src, std::int64_t bound,
                                       const Slope* stop_at) {
  std::unordered_map<Slope, int> dist{{src, 0}};
  std::deque<Slope> queue{src};
  while (!queue.empty()) {
    const Slope v = queue.front();
    queue.pop_front();
    const int dv = dist.at(v);
    scan_neighbors(v, bound, [&](const Slope& n) {
      if (dist.emplace(n, dv + 1).second) queue.push_back(n);
    });
    if (stop_at && dist.contains(*stop_at)) break;
  }
  return dist;
}

}  // namespace

int bfs_distance_oracle(const Slope& src, const Slope& dst, std::int64_t denominator_bound) {
  if (denominator_bound < 1) throw DomainError("denominator bound must be positive");
  if (!in_window(src, denominator_bound) || !in_window(dst, denominator_bound)) {
    throw DomainError("oracle endpoints must lie in the bounded window");
  }
  const auto dist = run_bfs(src, denominator_bound, &dst);
  const auto it = dist.find(dst);
  if (it == dist.end()) throw InternalError("bounded Farey window is disconnected");
  return it->second;
}

std::vector<std::pair<Slope, int>> bfs_oracle_distances(const Slope& src,
                                                        std::int64_t denominator_bound) {
  if (denominator_bound < 1) throw DomainError("denominator bound must be positive");
  if (!in_window(src, denominator_bound)) throw DomainError("oracle source outside the window");
  const auto dist = run_bfs(src, denominator_bound, nullptr);
  return {dist.begin(), dist.end()};
}

}  // namespace bridgepants
