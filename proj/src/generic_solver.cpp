#include "ihs/generic_solver.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace ihs {
namespace {

// Calls visit(combo) for every k-subset of pool in lexicographic order until
// visit returns true. Returns whether some call returned true.
template <typename Visit>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> combo(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) combo[i] = pool[idx[i]];
    if (visit(combo)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class GenericSolver {
 public:
  GenericSolver(const Oracle& oracle, const GenericSolverConfig& cfg)
      : oracle_(oracle),
        n_(oracle.universe_size()),
        y_max_(cfg.max_swap_out),
        limit_(cfg.max_iterations.value_or(10 * static_cast<std::uint64_t>(n_) + 1000)),
        gamma_(n_),
        containing_(n_) {
    if (y_max_ < 1) throw std::invalid_argument("max_swap_out must be at least 1");
  }

  SolveCertificate run() {
    while (true) {
      set_current(full_set(n_));
      while (auto candidate = find_swap()) {
        const OracleVerdict verdict = query(*candidate);
        if (verdict.is_feasible()) {
          set_current(std::move(*candidate));
        } else {
          add_to_gamma(verdict.subset(), "swap candidate");
        }
      }
      HittingSet k = exact_min_hitting_set(gamma_);
      ++subroutine_calls_;
      if (k.size() == current_.size()) return finish(current_, OptimalityProof::kSizeMatch);
      const OracleVerdict verdict = query(k);
      if (verdict.is_feasible()) return finish(std::move(k), OptimalityProof::kFeasibleOptimum);
      add_to_gamma(verdict.subset(), "relaxation optimum");
    }
  }

 private:
  OracleVerdict query(const HittingSet& h) {
    if (oracle_calls_ >= limit_) {
      throw SolverAbort("generic solver exceeded " + std::to_string(limit_) + " oracle calls",
                        current_, gamma_);
    }
    ++oracle_calls_;
    return oracle_.check(h);
  }

  // The queried set was Gamma-feasible, so a sound oracle never repeats a
  // member of Gamma.
  void add_to_gamma(const VertexSet& subset, const char* source) {
    const std::size_t id = gamma_.size();
    if (!gamma_.add(subset)) {
      throw std::logic_error(std::string("oracle returned a subset already in gamma for a ") +
                             source);
    }
    hits_.push_back(0);
    for (Vertex v : subset) {
      containing_[v].push_back(id);
      if (in_h_[v]) ++hits_[id];
    }
  }

  void set_current(HittingSet h) {
    current_ = std::move(h);
    in_h_ = current_.mask(n_);
    for (std::size_t s = 0; s < gamma_.size(); ++s) {
      std::size_t c = 0;
      for (Vertex v : gamma_[s]) c += in_h_[v];
      hits_[s] = c;
    }
  }

  // First Gamma-feasible (H + X) - Y with |X| < |Y| <= y_max, enumerating |Y|
  // then Y lexicographically, then |X| then X lexicographically.
  std::optional<HittingSet> find_swap() {
    const std::vector<Vertex>& h = current_.members();
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n_; ++v) {
      if (!in_h_[v]) outside.push_back(v);
    }
    std::optional<HittingSet> found;
    std::vector<std::size_t> critical;
    std::vector<std::size_t> lost(gamma_.size(), 0);
    for (std::size_t ysize = 1; ysize <= y_max_ && !found; ++ysize) {
      for_each_combination(h, ysize, [&](const std::vector<Vertex>& y) {
        // Subsets of Gamma left unhit once Y is removed.
        critical.clear();
        for (Vertex v : y) {
          for (std::size_t s : containing_[v]) ++lost[s];
        }
        for (Vertex v : y) {
          for (std::size_t s : containing_[v]) {
            if (lost[s] == hits_[s]) {
              critical.push_back(s);
              lost[s] = 0;  // dedupe
            }
          }
        }
        for (Vertex v : y) {
          for (std::size_t s : containing_[v]) lost[s] = 0;
        }
        for (std::size_t xsize = 0; xsize < ysize; ++xsize) {
          const bool hit = for_each_combination(outside, xsize, [&](const std::vector<Vertex>& x) {
            for (std::size_t s : critical) {
              if (!gamma_[s].intersects(VertexSet::from_sorted(x))) return false;
            }
            found = current_.set_union(VertexSet::from_sorted(x))
                        .set_difference(VertexSet::from_sorted(y));
            return true;
          });
          if (hit) return true;
        }
        return false;
      });
    }
    return found;
  }

  SolveCertificate finish(HittingSet solution, OptimalityProof proof) {
    SolveCertificate cert;
    cert.solution = std::move(solution);
    cert.gamma = gamma_;
    cert.proof = proof;
    cert.oracle_calls = oracle_calls_;
    cert.subroutine_calls = subroutine_calls_;
    return cert;
  }

  const Oracle& oracle_;
  const std::size_t n_;
  const std::size_t y_max_;
  const std::uint64_t limit_;
  SubsetFamily gamma_;
  std::vector<std::vector<std::size_t>> containing_;  // element -> Gamma indices
  std::vector<std::size_t> hits_;                     // |s ∩ H| per Gamma subset
  HittingSet current_;
  std::vector<char> in_h_;
  std::uint64_t oracle_calls_ = 0;
  std::uint64_t subroutine_calls_ = 0;
};

}  // namespace

SolveCertificate generic_solve(const Oracle& oracle, const GenericSolverConfig& cfg) {
  return GenericSolver(oracle, cfg).run();
}

Vertex pick_min_id(const VertexSet& missed, const HittingSet& /*current*/) {
  return missed[0];
}

OnlineResult online_augment(const Oracle& oracle, const ElementPicker& pick) {
  OnlineResult result;
  while (true) {
    ++result.oracle_calls;
    const OracleVerdict verdict = oracle.check(result.solution);
    if (verdict.is_feasible()) return result;
    const Vertex v = pick(verdict.subset(), result.solution);
    if (!verdict.subset().contains(v) || result.solution.contains(v)) {
      throw std::logic_error("pick must choose a new element of the missed subset");
    }
    result.solution.insert(v);
    ++result.misses;
  }
}

}  // namespace ihs
