#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ihs/hitting_set.hpp"
#include "ihs/oracles.hpp"

namespace ihs {

struct GenericSolverConfig {
  /// Largest swap-out size |Y|; swap-in sets X satisfy |X| < |Y|.
  std::size_t max_swap_out = 2;
  /// Cap on oracle calls; nullopt means 10 * |U| + 1000.
  std::optional<std::uint64_t> max_iterations;
};

enum class OptimalityProof {
  kSizeMatch,        // |H| == |K| for the final Gamma-optimal K
  kFeasibleOptimum,  // the Gamma-optimal K itself is feasible
};

struct SolveCertificate {
  HittingSet solution;
  SubsetFamily gamma;
  OptimalityProof proof = OptimalityProof::kSizeMatch;
  std::uint64_t oracle_calls = 0;
  std::uint64_t subroutine_calls = 0;  // exact hitting set solves
};

/// Raised when the iteration cap is hit. Carries the state reached so far.
class SolverAbort : public std::runtime_error {
 public:
  SolverAbort(const std::string& what, HittingSet best, SubsetFamily gamma)
      : std::runtime_error(what), best_(std::move(best)), gamma_(std::move(gamma)) {}
  const HittingSet& best() const { return best_; }
  const SubsetFamily& gamma() const { return gamma_; }

 private:
  HittingSet best_;
  SubsetFamily gamma_;
};

/// Optimal implicit hitting set by alternating bounded swap improvement of a
/// feasible H with Gamma-optimal relaxations K (exact_min_hitting_set).
/// Stops when |H| == |K| or K is feasible; both certify global optimality.
/// Throws std::logic_error if the oracle contradicts itself (repeats a subset
/// already in Gamma or calls the full universe infeasible).
SolveCertificate generic_solve(const Oracle& oracle, const GenericSolverConfig& cfg = {});

/// Chooses which element of a missed subset to commit to.
using ElementPicker = std::function<Vertex(const VertexSet& missed, const HittingSet& current)>;

/// Smallest id in the missed subset.
Vertex pick_min_id(const VertexSet& missed, const HittingSet& current);

struct OnlineResult {
  HittingSet solution;
  std::uint64_t oracle_calls = 0;
  std::uint64_t misses = 0;
};

/// Online augmentation: starting from the empty set, add pick(S) for every
/// missed subset S until the oracle reports feasibility. Never removes.
OnlineResult online_augment(const Oracle& oracle, const ElementPicker& pick = pick_min_id);

}  // namespace ihs
