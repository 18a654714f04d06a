#include "ihs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ihs/disjoint_sets.hpp"

namespace ihs {

namespace {

void check_vertex(Vertex v, std::size_t n) {
  if (v >= n) {
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n));
  }
}

// Counting-sort fill of CSR rows; rows end up sorted and deduplicated.
// When `symmetric` is set every pair (r, c) also lands in row c.
void build_csr(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
               bool symmetric, std::vector<std::size_t>& offsets,
               std::vector<Vertex>& cols) {
  offsets.assign(n + 1, 0);
  for (const auto& [r, c] : pairs) {
    ++offsets[r + 1];
    if (symmetric) ++offsets[c + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  cols.resize(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [r, c] : pairs) {
    cols[cursor[r]++] = c;
    if (symmetric) cols[cursor[c]++] = r;
  }
  // Sort and compact each row in place.
  std::size_t write = 0;
  for (std::size_t r = 0; r < n; ++r) {
    auto first = cols.begin() + static_cast<std::ptrdiff_t>(offsets[r]);
    auto last = cols.begin() + static_cast<std::ptrdiff_t>(offsets[r + 1]);
    if (!std::is_sorted(first, last)) std::sort(first, last);
    auto uend = std::unique(first, last);
    offsets[r] = write;
    write = static_cast<std::size_t>(std::copy(first, uend, cols.begin() + static_cast<std::ptrdiff_t>(write)) - cols.begin());
  }
  offsets[n] = write;
  cols.resize(write);
  cols.shrink_to_fit();
}

}  // namespace

// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
  VertexSet s;
  s.members_ = std::move(ids);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(size() + other.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

void VertexSet::check_range(std::size_t n) const {
  if (!members_.empty()) check_vertex(members_.back(), n);
}

std::vector<char> VertexSet::mask(std::size_t n) const {
  check_range(n);
  std::vector<char> m(n, 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

VertexSet full_set(std::size_t n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  return VertexSet::from_sorted(std::move(ids));
}

// Graph

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
  for (const auto& [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
  }
  build_csr(n, edges, /*symmetric=*/true, offsets_, neighbors_);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// Digraph

Digraph::Digraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs) : n_(n) {
  for (auto& [u, v] : arcs) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
  }
  build_csr(n, arcs, /*symmetric=*/false, out_offsets_, out_);
  for (auto& [u, v] : arcs) std::swap(u, v);
  build_csr(n, arcs, /*symmetric=*/false, in_offsets_, in_);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_arcs());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_neighbors(u)) out.emplace_back(u, v);
  }
  return out;
}

// Algorithms

bool is_acyclic_undirected(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.num_vertices();
  const auto gone = removed.mask(n);
  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u) {
    if (gone[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || gone[v]) continue;
      if (!sets.unite(u, v)) return false;
    }
  }
  return true;
}

bool is_acyclic_directed(const Digraph& d, const VertexSet& removed) {
  // Kahn's algorithm on the surviving vertices.
  const std::size_t n = d.num_vertices();
  const auto gone = removed.mask(n);
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<Vertex> stack;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    ++alive;
    for (Vertex u : d.in_neighbors(v)) {
      if (!gone[u]) ++in_degree[v];
    }
    if (in_degree[v] == 0) stack.push_back(v);
  }
  std::size_t popped = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++popped;
    for (Vertex v : d.out_neighbors(u)) {
      if (gone[v]) continue;
      if (--in_degree[v] == 0) stack.push_back(v);
    }
  }
  return popped == alive;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const std::size_t n = g.num_vertices();
  keep.check_range(n);
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> new_id(n, kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<Vertex>(i);

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && new_id[v] != kAbsent) edges.emplace_back(new_id[u], new_id[v]);
    }
  }
  return {Graph(keep.size(), std::move(edges)), keep.members()};
}

Graph shadow_undirected(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(d.num_arcs());
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v : d.out_neighbors(u)) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(d.num_vertices(), std::move(edges));
}

}  // namespace ihs
