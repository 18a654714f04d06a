#include "ihs/hitting_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ihs {

SubsetFamily::SubsetFamily(std::size_t universe_size, std::vector<VertexSet> subsets)
    : universe_size_(universe_size) {
  for (auto& s : subsets) add(std::move(s));
}

bool SubsetFamily::add(VertexSet subset) {
  if (subset.empty()) {
    throw std::invalid_argument("empty subset cannot be hit");
  }
  subset.check_range(universe_size_);
  if (!index_.insert(subset).second) return false;
  subsets_.push_back(std::move(subset));
  return true;
}

std::size_t SubsetFamily::max_subset_size() const {
  std::size_t m = 0;
  for (const auto& s : subsets_) m = std::max(m, s.size());
  return m;
}

bool gamma_feasible(const HittingSet& h, const SubsetFamily& fam) {
  return std::all_of(fam.begin(), fam.end(),
                     [&](const VertexSet& s) { return s.intersects(h); });
}

HittingSet greedy_hitting_set(const SubsetFamily& fam) {
  std::vector<std::size_t> order(fam.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return greedy_hitting_set(fam, order);
}

HittingSet greedy_hitting_set(const SubsetFamily& fam,
                              const std::vector<std::size_t>& order) {
  std::vector<char> taken(fam.universe_size(), 0);
  std::vector<Vertex> chosen;
  for (std::size_t idx : order) {
    const VertexSet& s = fam[idx];
    const bool hit = std::any_of(s.begin(), s.end(), [&](Vertex v) { return taken[v]; });
    if (hit) continue;
    for (Vertex v : s) {
      taken[v] = 1;
      chosen.push_back(v);
    }
  }
  return HittingSet(std::move(chosen));
}

namespace {

// Branch-and-bound over element inclusion on a compressed instance: elements
// are renumbered 0..E-1 in ascending original order.
class ExactSearch {
 public:
  explicit ExactSearch(const SubsetFamily& fam) {
    std::vector<Vertex> used;
    for (const auto& s : fam) used.insert(used.end(), s.begin(), s.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    original_ = used;

    sets_.reserve(fam.size());
    for (const auto& s : fam) {
      std::vector<int> elems;
      elems.reserve(s.size());
      for (Vertex v : s) {
        elems.push_back(static_cast<int>(
            std::lower_bound(used.begin(), used.end(), v) - used.begin()));
      }
      sets_.push_back(std::move(elems));
    }
    containing_.assign(original_.size(), {});
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      for (int e : sets_[i]) containing_[e].push_back(static_cast<int>(i));
    }
    hits_.assign(sets_.size(), 0);
    alive_.resize(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) alive_[i] = static_cast<int>(sets_[i].size());
    state_.assign(original_.size(), kFree);
    mark_.assign(original_.size(), 0);
    unhit_count_ = static_cast<int>(sets_.size());
  }

  std::size_t num_elements() const { return original_.size(); }
  Vertex original(int e) const { return original_[e]; }

  int optimum_size(int upper_bound) {
    best_ = upper_bound;
    minimize(0);
    return best_;
  }

  // Lexicographically smallest optimal set, given its size.
  std::vector<Vertex> canonical_solution(int size) {
    std::vector<Vertex> out;
    int remaining = size;
    int next_candidate = 0;
    while (unhit() > 0) {
      bool placed = false;
      for (int e = next_candidate; e < static_cast<int>(num_elements()); ++e) {
        if (state_[e] != kFree) continue;
        include(e);
        if (feasible(remaining - 1)) {
          out.push_back(original(e));
          --remaining;
          next_candidate = e + 1;
          placed = true;
          break;
        }
        exclude_undo_include(e);
      }
      if (!placed) throw std::logic_error("exact hitting set: canonicalization failed");
    }
    return out;
  }

 private:
  static constexpr char kFree = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  int unhit() const { return unhit_count_; }

  void include(int e) {
    state_[e] = kIn;
    for (int s : containing_[e]) {
      if (hits_[s]++ == 0) --unhit_count_;
    }
  }
  void undo_include(int e) {
    state_[e] = kFree;
    for (int s : containing_[e]) {
      if (--hits_[s] == 0) ++unhit_count_;
    }
  }
  // Reverts include(e) and then bans e for the rest of the search.
  void exclude_undo_include(int e) {
    undo_include(e);
    exclude(e);
  }
  void exclude(int e) {
    state_[e] = kOut;
    for (int s : containing_[e]) --alive_[s];
  }
  void undo_exclude(int e) {
    state_[e] = kFree;
    for (int s : containing_[e]) ++alive_[s];
  }

  // Greedy packing of pairwise element-disjoint unhit subsets; each needs its
  // own element, so the count is a lower bound on the remaining cost.
  // Returns -1 if some unhit subset has no free element left.
  int lower_bound() {
    order_.clear();
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (hits_[i] == 0) {
        if (alive_[i] == 0) return -1;
        order_.push_back(static_cast<int>(i));
      }
    }
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return alive_[a] < alive_[b] || (alive_[a] == alive_[b] && a < b); });
    ++stamp_;
    int bound = 0;
    for (int s : order_) {
      bool clash = false;
      for (int e : sets_[s]) {
        if (state_[e] == kFree && mark_[e] == stamp_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (int e : sets_[s]) {
        if (state_[e] == kFree) mark_[e] = stamp_;
      }
      ++bound;
    }
    return bound;
  }

  // Free element covering the most unhit subsets; ties go to the smaller id.
  int branch_element() const {
    int best = -1;
    int best_cover = 0;
    for (int e = 0; e < static_cast<int>(num_elements()); ++e) {
      if (state_[e] != kFree) continue;
      int cover = 0;
      for (int s : containing_[e]) cover += hits_[s] == 0;
      if (cover > best_cover) {
        best_cover = cover;
        best = e;
      }
    }
    return best;
  }

  void minimize(int chosen) {
    if (unhit_count_ == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    const int lb = lower_bound();
    if (lb < 0 || chosen + lb >= best_) return;
    const int e = branch_element();
    if (e < 0) return;
    include(e);
    minimize(chosen + 1);
    undo_include(e);
    exclude(e);
    minimize(chosen);
    undo_exclude(e);
  }

  bool feasible(int budget) {
    if (unhit_count_ == 0) return true;
    if (budget <= 0) return false;
    const int lb = lower_bound();
    if (lb < 0 || lb > budget) return false;
    const int e = branch_element();
    if (e < 0) return false;
    include(e);
    bool ok = feasible(budget - 1);
    undo_include(e);
    if (ok) return true;
    exclude(e);
    ok = feasible(budget);
    undo_exclude(e);
    return ok;
  }

  std::vector<Vertex> original_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> hits_;
  std::vector<int> alive_;
  std::vector<char> state_;
  int unhit_count_ = 0;
  int best_ = 0;
  std::vector<int> order_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
};

}  // namespace

HittingSet exact_min_hitting_set(const SubsetFamily& fam) {
  if (fam.empty()) return {};
  ExactSearch search(fam);
  const int upper = static_cast<int>(greedy_hitting_set(fam).size());
  // optimum_size only reports strictly better solutions than its bound.
  const int optimum = search.optimum_size(upper + 1);
  return HittingSet::from_sorted(search.canonical_solution(optimum));
}

}  // namespace ihs
