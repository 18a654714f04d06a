#include "ihs/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ihs {

namespace {

constexpr Vertex kNone = ~Vertex{0};
constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

// Breadth-first distances from `source` over `next(x)` restricted to vertices
// with ok[x] set, explored up to `limit` steps.
template <class Next>
std::vector<std::size_t> bounded_distances(std::size_t n, Vertex source, const std::vector<char>& ok,
                                           std::size_t limit, Next&& next) {
  std::vector<std::size_t> dist(n, kFar);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= limit) continue;
    for (Vertex y : next(x)) {
      if (!ok[y] || dist[y] != kFar) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

// Depth-first search for simple cycles of exactly `length` vertices that
// start and end at `anchor`. Vertices other than the anchor must satisfy
// ok[x]; dist[x] (steps from x back to the anchor) prunes hopeless branches.
// Neighbours are scanned in ascending order, so sequences are produced in
// lexicographic order. `emit` returns false to stop the search.
template <class Next, class Closes, class Emit>
void cycle_dfs(std::size_t n, Vertex anchor, std::size_t length, const std::vector<char>& ok,
               const std::vector<std::size_t>& dist, bool undirected, Next&& next,
               Closes&& closes, Emit&& emit) {
  std::vector<Vertex> path{anchor};
  std::vector<std::size_t> cursor{0};
  std::vector<char> on_path(n, 0);
  on_path[anchor] = 1;
  while (!path.empty()) {
    const Vertex x = path.back();
    if (path.size() == length) {
      const bool canonical = !undirected || length < 3 || path[1] < x;
      if (canonical && closes(x) && !emit(path)) return;
      on_path[x] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    auto nb = next(x);
    std::size_t& i = cursor.back();
    bool pushed = false;
    while (i < nb.size()) {
      const Vertex y = nb[i++];
      if (y <= anchor || !ok[y] || on_path[y]) continue;
      const std::size_t steps_left = length - path.size();
      if (dist[y] > steps_left) continue;
      if (undirected && path.size() + 1 == length && length >= 3 && y < path[1]) continue;
      path.push_back(y);
      cursor.push_back(0);
      on_path[y] = 1;
      pushed = true;
      break;
    }
    if (!pushed) {
      on_path[x] = 0;
      path.pop_back();
      cursor.pop_back();
    }
  }
}

// Vertices allowed for cycles anchored at `anchor`: alive and > anchor.
std::vector<char> above_anchor(const std::vector<char>& alive, Vertex anchor) {
  std::vector<char> ok(alive);
  for (Vertex v = 0; v <= anchor && v < ok.size(); ++v) ok[v] = 0;
  return ok;
}

}  // namespace

OracleVerdict OracleVerdict::missed(VertexSet subset) {
  if (subset.empty()) throw std::invalid_argument("oracle returned an empty subset");
  OracleVerdict v;
  v.missed_ = std::move(subset);
  return v;
}

OracleVerdict ExplicitFamilyOracle::check(const HittingSet& h) const {
  for (const auto& s : fam_) {
    if (!s.intersects(h)) return OracleVerdict::missed(s);
  }
  return OracleVerdict::feasible();
}

BfsCycleOracle::BfsCycleOracle(const Graph& g, Vertex root) : g_(&g), root_(root) {
  if (root >= g.num_vertices()) throw std::out_of_range("BFS oracle root out of range");
}

OracleVerdict BfsCycleOracle::check(const HittingSet& h) const {
  const Graph& g = *g_;
  const std::size_t n = g.num_vertices();
  const auto gone = h.mask(n);
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> seen(n, 0);

  auto search_from = [&](Vertex start) -> std::optional<VertexSet> {
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (gone[y]) continue;
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (y != parent[x]) {
          std::vector<Vertex> cycle{x, y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) cycle.push_back(a = parent[a]);
          while (depth[b] > depth[a]) cycle.push_back(b = parent[b]);
          while (a != b) {
            cycle.push_back(a = parent[a]);
            cycle.push_back(b = parent[b]);
          }
          return VertexSet(std::move(cycle));
        }
      }
    }
    return std::nullopt;
  };

  if (!gone[root_]) {
    if (auto c = search_from(root_)) return OracleVerdict::missed(std::move(*c));
  }
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    if (auto c = search_from(s)) return OracleVerdict::missed(std::move(*c));
  }
  return OracleVerdict::feasible();
}

std::optional<Cycle> shortest_cycle(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.num_vertices();
  std::vector<char> alive = removed.mask(n);
  for (auto& a : alive) a = !a;

  // Girth: minimum over BFS roots of d(x) + d(y) + 1 across non-tree edges.
  std::size_t girth = kFar;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    std::fill(dist.begin(), dist.end(), kFar);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    parent[s] = kNone;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (girth != kFar && 2 * dist[x] >= girth) break;
      for (Vertex y : g.neighbors(x)) {
        if (!alive[y]) continue;
        if (dist[y] == kFar) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (girth == kFar) return std::nullopt;

  auto next = [&](Vertex x) { return g.neighbors(x); };
  for (Vertex a = 0; a < n; ++a) {
    if (!alive[a]) continue;
    auto ok = above_anchor(alive, a);
    ok[a] = 1;
    auto to_anchor = bounded_distances(n, a, ok, girth, next);
    ok[a] = 0;
    std::optional<Cycle> found;
    cycle_dfs(
        n, a, girth, ok, to_anchor, /*undirected=*/true, next,
        [&](Vertex x) { return g.has_edge(x, a); },
        [&](const std::vector<Vertex>& path) {
          found = Cycle{path};
          return false;
        });
    if (found) return found;
  }
  throw std::logic_error("shortest_cycle: girth found but no cycle reconstructed");
}

std::optional<Cycle> shortest_cycle(const Digraph& d, const VertexSet& removed) {
  const std::size_t n = d.num_vertices();
  std::vector<char> alive = removed.mask(n);
  for (auto& a : alive) a = !a;

  // Shortest cycle whose minimum vertex is the anchor: BFS inside ids >= anchor.
  auto out = [&](Vertex x) { return d.out_neighbors(x); };
  auto in = [&](Vertex x) { return d.in_neighbors(x); };
  std::size_t girth = kFar;
  Vertex best_anchor = kNone;
  for (Vertex a = 0; a < n; ++a) {
    if (!alive[a]) continue;
    auto ok = above_anchor(alive, a);
    const std::size_t limit = girth == kFar ? n : girth - 1;
    auto from_anchor = bounded_distances(n, a, ok, limit, out);
    for (Vertex x : d.in_neighbors(a)) {
      if (!ok[x] || from_anchor[x] == kFar) continue;
      if (from_anchor[x] + 1 < girth) {
        girth = from_anchor[x] + 1;
        best_anchor = a;
      }
    }
  }
  if (girth == kFar) return std::nullopt;

  const Vertex a = best_anchor;
  auto ok = above_anchor(alive, a);
  ok[a] = 1;
  auto to_anchor = bounded_distances(n, a, ok, girth, in);
  ok[a] = 0;
  std::optional<Cycle> found;
  cycle_dfs(
      n, a, girth, ok, to_anchor, /*undirected=*/false, out,
      [&](Vertex x) { return d.has_arc(x, a); },
      [&](const std::vector<Vertex>& path) {
        found = Cycle{path};
        return false;
      });
  if (!found) throw std::logic_error("shortest_cycle: girth found but no cycle reconstructed");
  return found;
}

OracleVerdict ShortestCycleOracle::check(const HittingSet& h) const {
  auto c = g_ ? shortest_cycle(*g_, h) : shortest_cycle(*d_, h);
  if (!c) return OracleVerdict::feasible();
  return OracleVerdict::missed(c->vertices());
}

std::size_t ShortestCycleOracle::universe_size() const {
  return g_ ? g_->num_vertices() : d_->num_vertices();
}

std::unique_ptr<Oracle> explicit_family_oracle(SubsetFamily fam) {
  return std::make_unique<ExplicitFamilyOracle>(std::move(fam));
}
std::unique_ptr<Oracle> bfs_cycle_oracle(const Graph& g, Vertex root) {
  return std::make_unique<BfsCycleOracle>(g, root);
}
std::unique_ptr<Oracle> shortest_cycle_oracle(const Graph& g) {
  return std::make_unique<ShortestCycleOracle>(g);
}
std::unique_ptr<Oracle> shortest_cycle_oracle(const Digraph& d) {
  return std::make_unique<ShortestCycleOracle>(d);
}

std::vector<Cycle> enumerate_k_cycles(const Digraph& d, int k, const std::vector<char>& allowed,
                                      std::size_t cap) {
  if (k < 2) throw std::invalid_argument("cycle length k must be at least 2");
  const std::size_t n = d.num_vertices();
  std::vector<char> alive = allowed.empty() ? std::vector<char>(n, 1) : allowed;
  if (alive.size() != n) throw std::invalid_argument("allowed mask has wrong length");
  const auto length = static_cast<std::size_t>(k);
  auto out = [&](Vertex x) { return d.out_neighbors(x); };
  auto in = [&](Vertex x) { return d.in_neighbors(x); };

  std::vector<Cycle> cycles;
  for (Vertex a = 0; a < n; ++a) {
    if (!alive[a] || d.in_neighbors(a).empty() || d.out_neighbors(a).empty()) continue;
    auto ok = above_anchor(alive, a);
    ok[a] = 1;
    auto to_anchor = bounded_distances(n, a, ok, length - 1, in);
    ok[a] = 0;
    cycle_dfs(
        n, a, length, ok, to_anchor, /*undirected=*/false, out,
        [&](Vertex x) { return d.has_arc(x, a); },
        [&](const std::vector<Vertex>& path) {
          if (cycles.size() >= cap) {
            throw CycleCapExceeded("more than " + std::to_string(cap) + " cycles of length " +
                                   std::to_string(k) + "; parameters outside a tractable regime");
          }
          cycles.push_back(Cycle{path});
          return true;
        });
  }
  return cycles;
}

bool has_k_cycle_through(const Digraph& d, Vertex v, int k, const std::vector<char>& allowed) {
  if (k < 2) throw std::invalid_argument("cycle length k must be at least 2");
  const std::size_t n = d.num_vertices();
  if (v >= n) throw std::out_of_range("vertex out of range");
  const auto length = static_cast<std::size_t>(k);
  std::vector<char> ok(allowed);
  ok[v] = 1;
  auto to_v = bounded_distances(n, v, ok, length - 1, [&](Vertex x) { return d.in_neighbors(x); });
  ok[v] = 0;

  // Same walk as cycle_dfs without the "ids above the anchor" restriction.
  std::vector<Vertex> path{v};
  std::vector<std::size_t> cursor{0};
  std::vector<char> on_path(n, 0);
  on_path[v] = 1;
  while (!path.empty()) {
    const Vertex x = path.back();
    if (path.size() == length) {
      if (d.has_arc(x, v)) return true;
      on_path[x] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    auto nb = d.out_neighbors(x);
    std::size_t& i = cursor.back();
    bool pushed = false;
    while (i < nb.size()) {
      const Vertex y = nb[i++];
      if (!ok[y] || on_path[y] || to_v[y] > length - path.size()) continue;
      path.push_back(y);
      cursor.push_back(0);
      on_path[y] = 1;
      pushed = true;
      break;
    }
    if (!pushed) {
      on_path[x] = 0;
      path.pop_back();
      cursor.pop_back();
    }
  }
  return false;
}

}  // namespace ihs
