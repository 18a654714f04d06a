#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "ihs/graph.hpp"

namespace ihs {

/// Growing list of nonempty subsets of [0, universe_size).
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::size_t universe_size) : universe_size_(universe_size) {}
  SubsetFamily(std::size_t universe_size, std::vector<VertexSet> subsets);

  /// Appends `subset`. Throws std::invalid_argument if it is empty and
  /// std::out_of_range if it leaves the universe. Returns false (and keeps
  /// the family unchanged) when the subset is already present.
  bool add(VertexSet subset);
  bool contains(const VertexSet& subset) const { return index_.contains(subset); }

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return subsets_.size(); }
  bool empty() const { return subsets_.empty(); }
  const VertexSet& operator[](std::size_t i) const { return subsets_[i]; }
  auto begin() const { return subsets_.begin(); }
  auto end() const { return subsets_.end(); }

  /// Size of the largest subset (0 for an empty family).
  std::size_t max_subset_size() const;

 private:
  std::size_t universe_size_ = 0;
  std::vector<VertexSet> subsets_;
  std::set<VertexSet> index_;
};

using HittingSet = VertexSet;

/// True iff `h` intersects every subset of `fam`.
bool gamma_feasible(const HittingSet& h, const SubsetFamily& fam);

/// Minimum-cardinality hitting set, exact. Among all optima the
/// lexicographically smallest sorted member list is returned.
HittingSet exact_min_hitting_set(const SubsetFamily& fam);

/// Processes subsets in family order (or in `order`, a permutation of subset
/// indices) and takes every element of each subset not yet hit. Within a
/// factor max_subset_size() of optimal.
HittingSet greedy_hitting_set(const SubsetFamily& fam);
HittingSet greedy_hitting_set(const SubsetFamily& fam, const std::vector<std::size_t>& order);

}  // namespace ihs
