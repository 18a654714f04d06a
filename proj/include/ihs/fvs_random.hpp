#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihs/graph.hpp"

namespace ihs {

/// Depth T = ceil((ln(1/16p) - ln ln(1/16p)) / ln(c + 20 sqrt(c))), c = np.
/// Throws std::domain_error unless 1/(16p) > e and c + 20 sqrt(c) > 1.
int depth_cap(std::uint64_t n, double p);

/// Depth the BFS growth should use for (n, p): depth_cap when c = np > 400
/// and the formula is defined, nullopt (grow until exhaustion) otherwise.
std::optional<int> regime_depth(std::uint64_t n, double p);

/// Counts for one BFS level t. Level 0 is the root: k = r = l = 1.
struct LevelStats {
  std::uint64_t l = 0;  // survivors |L_t|
  std::uint64_t u = 0;  // unexposed vertices after the level, |U_t|
  std::uint64_t r = 0;  // unique neighbours of L_{t-1}, |R_t|
  std::uint64_t m = 0;  // edges inside R_t
  std::uint64_t k = 0;  // newly exposed vertices |K_t|
  std::uint64_t w = 0;  // vertices of R_t not kept

  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

struct FvsResult {
  VertexSet fvs;
  VertexSet survivors;  // vertices of the induced BFS tree
  VertexSet restored;   // moved from the FVS back by the prune pass
  std::vector<LevelStats> stats;  // one entry per nonempty level
  int T_used = 0;                 // depth of the deepest nonempty level
  std::optional<int> T_cap;       // depth limit in force (nullopt: none)

  friend bool operator==(const FvsResult&, const FvsResult&) = default;
};

struct GrowOptions {
  /// Edge probability used for the depth cap; defaults to the graph density.
  std::optional<double> p;
  /// Explicit depth limit T >= 1, overriding the regime rule.
  std::optional<int> depth;
  /// Re-add FVS vertices in ascending id order while the rest stays a forest.
  bool prune = false;
};

/// Grows an induced BFS tree from `root`. Levels 1..T-1 keep the unique
/// neighbours of the previous level minus the larger endpoint of every
/// surviving inner edge; level T keeps a greedy independent set of the
/// unique neighbours in ascending id order. Without a cap every level uses
/// the greedy rule and growth stops at the first empty level. Returns the
/// complement of the tree as the feedback vertex set.
FvsResult grow_induced_bfs(const Graph& g, Vertex root, const GrowOptions& opts = {});

/// Same on the underlying undirected graph of `d`. For each antiparallel
/// pair with neither endpoint in the FVS, the larger endpoint moves to the FVS;
/// stats still describe the undirected run.
FvsResult fvs_directed(const Digraph& d, Vertex root, const GrowOptions& opts = {});

struct Lemma1Level {
  int t = 0;
  double u = 0, u_lo = 0, u_hi = 0;
  double l = 0, l_lo = 0, l_hi = 0;
  // Unique neighbours of L_t, i.e. the r of level t + 1.
  double r = 0, r_lo = 0, r_hi = 0;
  bool u_ok = false, l_ok = false, r_ok = false;
  bool ok() const { return u_ok && l_ok && r_ok; }
};

struct Lemma1Report {
  bool applicable = false;  // false when c - 20 sqrt(c) <= 0 or no level fits
  std::string note;
  int lemma_T = 0;          // largest T with 16 T p (c + 20 sqrt c)^(T-1) <= 1/2
  std::optional<int> box_T; // depth_cap(n, p) when defined
  bool box_T_satisfies_hypothesis = false;
  std::vector<Lemma1Level> levels;  // t = 0 .. lemma_T - 1

  bool all_pass() const;     // applicable and every tracked bound holds
  bool u_bounds_pass() const;
};

/// Evaluates the concentration bounds for u_t, l_t and r_{t+1} at each
/// level t < lemma_T. Levels missing from `stats` count as empty.
Lemma1Report check_lemma1_bounds(const std::vector<LevelStats>& stats, std::uint64_t n, double p);

/// Fraction of `samples` uniformly random r-subsets whose induced subgraph
/// is a forest.
double sample_acyclic_fraction(const Graph& g, std::uint64_t r, std::uint64_t samples,
                               std::uint64_t seed);

}  // namespace ihs
