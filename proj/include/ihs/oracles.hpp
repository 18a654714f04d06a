#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihs/graph.hpp"
#include "ihs/hitting_set.hpp"

namespace ihs {

/// Result of one oracle query: the queried set is feasible, or here is a
/// nonempty subset of the implicit family that it misses.
class OracleVerdict {
 public:
  static OracleVerdict feasible() { return OracleVerdict(); }
  static OracleVerdict missed(VertexSet subset);

  bool is_feasible() const { return !missed_.has_value(); }
  /// Precondition: !is_feasible().
  const VertexSet& subset() const { return *missed_; }

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;

 private:
  OracleVerdict() = default;
  std::optional<VertexSet> missed_;
};

/// Implicit hitting set instance. `check` must be sound: Feasible only if no
/// subset of the implicit family avoids `h`; a returned subset belongs to the
/// family and is disjoint from `h`. Implementations are read-only and
/// reentrant.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual OracleVerdict check(const HittingSet& h) const = 0;
  virtual std::size_t universe_size() const = 0;
};

/// Wraps an explicit family; returns the first unhit subset in family order.
class ExplicitFamilyOracle final : public Oracle {
 public:
  explicit ExplicitFamilyOracle(SubsetFamily fam) : fam_(std::move(fam)) {}
  OracleVerdict check(const HittingSet& h) const override;
  std::size_t universe_size() const override { return fam_.universe_size(); }

 private:
  SubsetFamily fam_;
};

/// Cycle oracle for undirected feedback vertex sets driven by breadth-first
/// search on G - h. The search starts at `root` (or at the smallest surviving
/// id when root is removed), then restarts from the remaining components in
/// ascending id order, scanning neighbours in ascending order. The first
/// non-tree edge met closes the returned cycle: both tree paths up to their
/// lowest common ancestor plus that edge.
class BfsCycleOracle final : public Oracle {
 public:
  BfsCycleOracle(const Graph& g, Vertex root);
  OracleVerdict check(const HittingSet& h) const override;
  std::size_t universe_size() const override { return g_->num_vertices(); }

 private:
  const Graph* g_;
  Vertex root_;
};

/// A simple cycle as its canonical vertex sequence: rotation starting at the
/// smallest id (and, for undirected cycles, the direction whose second vertex
/// is smaller).
struct Cycle {
  std::vector<Vertex> sequence;

  std::size_t length() const { return sequence.size(); }
  VertexSet vertices() const { return VertexSet(sequence); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Lexicographically smallest canonical cycle among the shortest cycles of
/// the graph minus `removed`, or nullopt if that graph is a forest.
std::optional<Cycle> shortest_cycle(const Graph& g, const VertexSet& removed);
/// Directed variant; antiparallel arc pairs count as cycles of length 2.
std::optional<Cycle> shortest_cycle(const Digraph& d, const VertexSet& removed);

/// Returns a minimum-length surviving cycle (see shortest_cycle) or Feasible.
class ShortestCycleOracle final : public Oracle {
 public:
  explicit ShortestCycleOracle(const Graph& g) : g_(&g) {}
  explicit ShortestCycleOracle(const Digraph& d) : d_(&d) {}
  OracleVerdict check(const HittingSet& h) const override;
  std::size_t universe_size() const override;

 private:
  const Graph* g_ = nullptr;
  const Digraph* d_ = nullptr;
};

std::unique_ptr<Oracle> explicit_family_oracle(SubsetFamily fam);
std::unique_ptr<Oracle> bfs_cycle_oracle(const Graph& g, Vertex root);
std::unique_ptr<Oracle> shortest_cycle_oracle(const Graph& g);
std::unique_ptr<Oracle> shortest_cycle_oracle(const Digraph& d);

/// Thrown when enumeration would exceed its cycle cap.
class CycleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every simple directed cycle with exactly k vertices, each once, as the
/// canonical sequence anchored at its minimum id. Output is ordered by anchor
/// and then lexicographically by sequence. `allowed`, when non-empty, is a
/// membership mask restricting the vertices cycles may use. Throws
/// CycleCapExceeded once more than `cap` cycles have been collected.
std::vector<Cycle> enumerate_k_cycles(const Digraph& d, int k,
                                      const std::vector<char>& allowed = {},
                                      std::size_t cap = std::numeric_limits<std::size_t>::max());

/// True iff some directed cycle with exactly k vertices passes through `v`
/// using only vertices with allowed[x] set (v itself need not be allowed).
bool has_k_cycle_through(const Digraph& d, Vertex v, int k, const std::vector<char>& allowed);

}  // namespace ihs
