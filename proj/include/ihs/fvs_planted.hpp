#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ihs/graph.hpp"
#include "ihs/random_models.hpp"

namespace ihs {

inline constexpr std::size_t kDefaultCycleCap = 10'000'000;

struct RecoveryReport {
  VertexSet recovered;   // H
  VertexSet greedy_set;  // S
  std::uint64_t cycles_found = 0;
  std::optional<bool> exact_match;  // H == ground truth, when supplied
};

/// Enumerates all directed cycles of lengths 2..k (by length, then anchor,
/// then sequence), takes the greedy hitting set S of that list, and keeps the
/// u in S that lie on a k-cycle inside (V \ S) + u. Requires k >= 3. Throws
/// CycleCapExceeded when more than `cap` cycles exist.
RecoveryReport recover_planted_fvs(const Digraph& d, int k, std::size_t cap = kDefaultCycleCap,
                                   const std::optional<VertexSet>& ground_truth = std::nullopt);

struct PlantedDiagnostics {
  RecoveryReport recovery;
  /// p * n^(1 - 2/k): the constant C at which p sits on the threshold curve.
  double effective_C = 0.0;
  std::uint64_t subset_size = 0;     // |S'| = ceil(|V \ P| / 10)
  std::uint64_t samples = 0;
  std::uint64_t checks = 0;          // samples * |P|
  std::uint64_t check_failures = 0;  // planted v without a k-cycle in S' + v
  std::uint64_t greedy_bound = 0;    // k * |P|
  bool greedy_within_bound = false;
  std::string note;

  bool cycles_through_all() const { return check_failures == 0; }
};

/// Samples random S' of V \ P and checks that every planted vertex closes a
/// k-cycle inside S' + v; also runs the recovery and compares |S| to k|P|.
PlantedDiagnostics verify_planted_theorems(const PlantedInstance& inst, std::uint64_t samples,
                                           std::uint64_t seed,
                                           std::size_t cap = kDefaultCycleCap);

}  // namespace ihs
