#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ihs {

using Vertex = std::uint32_t;

/// Sorted list of distinct vertex ids. Used for every vertex subset in the
/// library (hitting sets, removed sets, levels, planted sets).
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  /// Adopts an already sorted, duplicate-free list without re-sorting.
  static VertexSet from_sorted(std::vector<Vertex> ids);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  bool intersects(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;

  /// Throws std::out_of_range if some member is >= n.
  void check_range(std::size_t n) const;

  /// Dense membership mask of length n.
  std::vector<char> mask(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// All ids in [0, n).
VertexSet full_set(std::size_t n);

/// Simple undirected graph on 0..n-1 in compressed adjacency form.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops and std::out_of_range on bad
  /// ids. Duplicate pairs (in either orientation) are merged.
  Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

/// Directed graph on 0..n-1 with sorted out- and in-adjacency. Antiparallel
/// pairs are allowed; self-loops are not.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_arcs() const { return out_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  bool has_arc(Vertex u, Vertex v) const;

  /// Arcs in lexicographic (tail, head) order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_;
};

/// True iff the subgraph induced on V \ removed is a forest.
bool is_acyclic_undirected(const Graph& g, const VertexSet& removed);

/// True iff the sub-digraph induced on V \ removed has a topological order.
bool is_acyclic_directed(const Digraph& d, const VertexSet& removed);

struct InducedSubgraph {
  Graph graph;
  /// original_id[i] is the id in the parent graph of new vertex i.
  std::vector<Vertex> original_id;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Forgets arc orientation; antiparallel pairs collapse into one edge.
Graph shadow_undirected(const Digraph& d);

}  // namespace ihs
