#include "ihs/fvs_random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ihs/disjoint_sets.hpp"
#include "ihs/rng.hpp"

namespace ihs {

int depth_cap(std::uint64_t n, double p) {
  if (!(p > 0.0)) throw std::domain_error("depth_cap: p must be positive");
  const double x = 1.0 / (16.0 * p);
  if (!(x > std::exp(1.0))) throw std::domain_error("depth_cap: requires 1/(16p) > e");
  const double c = static_cast<double>(n) * p;
  const double base = c + 20.0 * std::sqrt(c);
  if (!(base > 1.0)) throw std::domain_error("depth_cap: requires c + 20 sqrt(c) > 1");
  const double t = (std::log(x) - std::log(std::log(x))) / std::log(base);
  return static_cast<int>(std::ceil(t));
}

std::optional<int> regime_depth(std::uint64_t n, double p) {
  const double c = static_cast<double>(n) * p;
  if (!(c > 400.0)) return std::nullopt;
  try {
    return depth_cap(n, p);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

namespace {

double density(const Graph& g) {
  const double n = static_cast<double>(g.num_vertices());
  if (n < 2) return 0.0;
  return static_cast<double>(g.num_edges()) / (n * (n - 1) / 2.0);
}

// Moves FVS vertices back in ascending order whenever they join the kept
// forest without closing a cycle.
VertexSet prune_pass(const Graph& g, const std::vector<char>& kept_init, const VertexSet& fvs) {
  const std::size_t n = g.num_vertices();
  std::vector<char> kept = kept_init;
  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u) {
    if (!kept[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v > u && kept[v]) sets.unite(u, v);
    }
  }
  std::vector<Vertex> restored;
  std::vector<Vertex> roots;
  for (Vertex v : fvs) {
    roots.clear();
    for (Vertex x : g.neighbors(v)) {
      if (kept[x]) roots.push_back(sets.find(x));
    }
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;
    kept[v] = 1;
    for (Vertex x : roots) sets.unite(v, x);
    restored.push_back(v);
  }
  return VertexSet::from_sorted(std::move(restored));
}

}  // namespace

FvsResult grow_induced_bfs(const Graph& g, Vertex root, const GrowOptions& opts) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::out_of_range("root out of range");
  FvsResult res;
  if (opts.depth) {
    if (*opts.depth < 1) throw std::invalid_argument("depth must be at least 1");
    res.T_cap = opts.depth;
  } else {
    res.T_cap = regime_depth(n, opts.p.value_or(density(g)));
  }

  std::vector<char> exposed(n, 0);
  std::vector<char> in_tree(n, 0);
  std::vector<std::uint32_t> count(n, 0);  // neighbours in the current level
  std::vector<char> in_r(n, 0);
  std::vector<char> dropped(n, 0);

  std::vector<Vertex> level{root};
  exposed[root] = 1;
  in_tree[root] = 1;
  std::uint64_t unexposed = n - 1;
  res.stats.push_back({1, unexposed, 1, 0, 1, 0});

  std::vector<Vertex> k_set;
  std::vector<Vertex> r_set;
  for (int depth = 1; !res.T_cap || depth <= *res.T_cap; ++depth) {
    k_set.clear();
    for (Vertex x : level) {
      for (Vertex y : g.neighbors(x)) {
        if (exposed[y]) continue;
        if (count[y]++ == 0) k_set.push_back(y);
      }
    }
    std::sort(k_set.begin(), k_set.end());
    r_set.clear();
    for (Vertex y : k_set) {
      exposed[y] = 1;
      if (count[y] == 1) {
        r_set.push_back(y);
        in_r[y] = 1;
      }
      count[y] = 0;
    }
    unexposed -= k_set.size();

    LevelStats st;
    st.k = k_set.size();
    st.r = r_set.size();
    st.u = unexposed;
    for (Vertex u : r_set) {
      for (Vertex v : g.neighbors(u)) st.m += v > u && in_r[v];
    }
    // Edges (u, v), u < v, in sorted order: drop v unless the edge is
    // already broken. This is also the ascending greedy independent set.
    for (Vertex u : r_set) {
      if (dropped[u]) continue;
      for (Vertex v : g.neighbors(u)) {
        if (v > u && in_r[v]) dropped[v] = 1;
      }
    }
    std::vector<Vertex> next;
    for (Vertex u : r_set) {
      if (!dropped[u]) {
        next.push_back(u);
        in_tree[u] = 1;
      }
      in_r[u] = 0;
      dropped[u] = 0;
    }
    st.l = next.size();
    st.w = st.r - st.l;
    if (next.empty()) break;
    res.stats.push_back(st);
    level = std::move(next);
  }
  res.T_used = static_cast<int>(res.stats.size()) - 1;

  std::vector<Vertex> fvs;
  std::vector<Vertex> tree;
  for (Vertex v = 0; v < n; ++v) (in_tree[v] ? tree : fvs).push_back(v);
  res.survivors = VertexSet::from_sorted(std::move(tree));
  res.fvs = VertexSet::from_sorted(std::move(fvs));
  if (opts.prune) {
    res.restored = prune_pass(g, in_tree, res.fvs);
    res.fvs = res.fvs.set_difference(res.restored);
  }
  return res;
}

FvsResult fvs_directed(const Digraph& d, Vertex root, const GrowOptions& opts) {
  FvsResult res = grow_induced_bfs(shadow_undirected(d), root, opts);
  // The shadow merges an antiparallel pair into one edge; break any such
  // 2-cycle left outside the FVS by dropping its larger endpoint.
  for (const auto& [u, v] : d.arcs()) {
    if (u < v && d.has_arc(v, u) && !res.fvs.contains(u) && !res.fvs.contains(v)) {
      if (res.restored.contains(v)) {
        res.restored.erase(v);
      } else {
        res.survivors.erase(v);
      }
      res.fvs.insert(v);
    }
  }
  return res;
}

bool Lemma1Report::all_pass() const {
  return applicable && std::all_of(levels.begin(), levels.end(),
                                   [](const Lemma1Level& lv) { return lv.ok(); });
}

bool Lemma1Report::u_bounds_pass() const {
  return applicable && std::all_of(levels.begin(), levels.end(),
                                   [](const Lemma1Level& lv) { return lv.u_ok; });
}

Lemma1Report check_lemma1_bounds(const std::vector<LevelStats>& stats, std::uint64_t n, double p) {
  Lemma1Report rep;
  const double nd = static_cast<double>(n);
  const double c = nd * p;
  const double hi = c + 20.0 * std::sqrt(c);
  const double lo = c - 20.0 * std::sqrt(c);
  try {
    rep.box_T = depth_cap(n, p);
    rep.box_T_satisfies_hypothesis =
        16.0 * *rep.box_T * p * std::pow(hi, *rep.box_T - 1) <= 0.5;
  } catch (const std::domain_error&) {
  }
  for (int t = 1; t < 64 && 16.0 * t * p * std::pow(hi, t - 1) <= 0.5; ++t) rep.lemma_T = t;

  if (!(lo > 0.0)) {
    rep.note = "not applicable: c - 20 sqrt(c) <= 0";
    return rep;
  }
  if (rep.lemma_T == 0) {
    rep.note = "not applicable: no level satisfies 16 T p (c + 20 sqrt c)^(T-1) <= 1/2";
    return rep;
  }
  rep.applicable = true;
  if (rep.box_T && !rep.box_T_satisfies_hypothesis) {
    rep.note = "depth cap violates the level hypothesis";
  }

  const double eps = std::sqrt(std::max(0.0, std::log(std::log(nd))) / nd);
  const double T = rep.lemma_T;
  auto sum_pow = [](double b, int t) {
    double s = 0, term = 1;
    for (int i = 0; i <= t; ++i, term *= b) s += term;
    return s;
  };
  auto level = [&](int t) -> LevelStats {
    if (t < static_cast<int>(stats.size())) return stats[t];
    LevelStats empty;
    empty.u = stats.empty() ? n : stats.back().u;
    return empty;
  };

  for (int t = 0; t < rep.lemma_T; ++t) {
    Lemma1Level lv;
    lv.t = t;
    lv.u = static_cast<double>(level(t).u);
    lv.l = static_cast<double>(level(t).l);
    lv.r = static_cast<double>(level(t + 1).r);
    lv.u_hi = (nd - 0.25 * sum_pow(lo, t)) * (1.0 + eps);
    lv.u_lo = (nd - sum_pow(hi, t)) * (1.0 - eps);
    lv.l_hi = std::pow(hi, t);
    lv.l_lo = std::pow(lo, t) * (1.0 - 16.0 * T * p * std::pow(hi, t)) * (1.0 - sum_pow(hi, t) / nd);
    lv.r_hi = std::pow(hi, t + 1) * (1.0 + eps);
    lv.r_lo = std::pow(lo, t + 1) / 4.0 * (1.0 - sum_pow(hi, t + 1) / nd) * (1.0 - eps);
    lv.u_ok = lv.u_lo <= lv.u && lv.u <= lv.u_hi;
    lv.l_ok = lv.l_lo <= lv.l && lv.l <= lv.l_hi;
    lv.r_ok = lv.r_lo <= lv.r && lv.r <= lv.r_hi;
    rep.levels.push_back(lv);
  }
  return rep;
}

double sample_acyclic_fraction(const Graph& g, std::uint64_t r, std::uint64_t samples,
                               std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (r > n) throw std::invalid_argument("r exceeds the number of vertices");
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<Vertex> slot(n, 0);  // vertex -> index among the chosen, + 1
  std::uint64_t acyclic = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::uint64_t i = 0; i < r; ++i) {
      const std::uint64_t j = i + rng.below(n - i);
      std::swap(perm[i], perm[j]);
      slot[perm[i]] = static_cast<Vertex>(i + 1);
    }
    DisjointSets sets(r);
    bool forest = true;
    for (std::uint64_t i = 0; i < r && forest; ++i) {
      const Vertex u = perm[i];
      for (Vertex v : g.neighbors(u)) {
        if (v < u || slot[v] == 0) continue;
        if (!sets.unite(static_cast<Vertex>(i), slot[v] - 1)) {
          forest = false;
          break;
        }
      }
    }
    acyclic += forest;
    for (std::uint64_t i = 0; i < r; ++i) slot[perm[i]] = 0;
  }
  return static_cast<double>(acyclic) / static_cast<double>(samples);
}

}  // namespace ihs
