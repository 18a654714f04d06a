#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <deque>

#include "brute_force.hpp"
#include "ihs/fvs_random.hpp"
#include "ihs/random_models.hpp"

using namespace ihs;

namespace {

// Tree distances from root inside the survivor set; -1 if unreachable.
std::vector<int> tree_depths(const Graph& g, const VertexSet& survivors, Vertex root) {
  const auto in = survivors.mask(g.num_vertices());
  std::vector<int> depth(g.num_vertices(), -1);
  std::deque<Vertex> q{root};
  depth[root] = 0;
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (in[y] && depth[y] < 0) {
        depth[y] = depth[x] + 1;
        q.push_back(y);
      }
    }
  }
  return depth;
}

void check_invariants(const Graph& g, Vertex root, const FvsResult& res) {
  const std::size_t n = g.num_vertices();
  CHECK(is_acyclic_undirected(g, res.fvs));
  CHECK(res.fvs.size() + res.survivors.size() + res.restored.size() == n);
  CHECK_FALSE(res.fvs.intersects(res.survivors));
  CHECK_FALSE(res.restored.intersects(res.survivors));

  // Survivors form an induced tree whose BFS layers are the levels.
  std::vector<char> outside(n, 1);
  for (Vertex v : res.survivors) outside[v] = 0;
  CHECK(brute::is_forest(g, outside));
  const auto depth = tree_depths(g, res.survivors, root);
  std::vector<std::uint64_t> per_level(res.stats.size(), 0);
  for (Vertex v : res.survivors) {
    REQUIRE(depth[v] >= 0);
    REQUIRE(static_cast<std::size_t>(depth[v]) < per_level.size());
    ++per_level[depth[v]];
  }
  std::uint64_t total = 0;
  std::uint64_t exposed = 0;
  for (std::size_t t = 0; t < res.stats.size(); ++t) {
    const LevelStats& s = res.stats[t];
    CHECK(s.l == per_level[t]);
    CHECK(s.l <= s.r);
    CHECK(s.r <= s.k);
    CHECK(s.w <= s.m);
    CHECK(s.l == s.r - s.w);
    exposed += s.k;
    CHECK(s.u == n - exposed);
    if (t > 0) CHECK(s.u <= res.stats[t - 1].u);
    total += s.l;
  }
  CHECK(total == res.survivors.size());
  CHECK(res.T_used == static_cast<int>(res.stats.size()) - 1);
}

}  // namespace

TEST_CASE("depth cap values and domain") {
  CHECK(depth_cap(100000, 1e-3) == 1);
  CHECK(depth_cap(1000000, 1e-5) == 2);
  CHECK_THROWS_AS(depth_cap(1000, 0.0), std::domain_error);
  CHECK_THROWS_AS(depth_cap(1000, 1.0 / (16 * std::exp(1.0)) * 1.001), std::domain_error);
  CHECK(regime_depth(20000, 0.005) == std::nullopt);  // c = 100
  CHECK(regime_depth(500000, 1e-3) == 1);
  CHECK(regime_depth(1000, 0.5) == std::nullopt);
}

TEST_CASE("triangle trace") {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  for (std::optional<int> depth : {std::optional<int>{}, std::optional<int>{1}, std::optional<int>{3}}) {
    GrowOptions opts;
    opts.depth = depth;
    const auto res = grow_induced_bfs(tri, 0, opts);
    CHECK(res.fvs == VertexSet{2});
    CHECK(res.survivors == VertexSet{0, 1});
    REQUIRE(res.stats.size() == 2);
    CHECK(res.stats[1] == LevelStats{1, 0, 2, 1, 2, 1});
  }
}

TEST_CASE("path and edgeless traces") {
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(grow_induced_bfs(path, 0).fvs.empty());
  CHECK(grow_induced_bfs(path, 0).T_used == 2);
  GrowOptions one;
  one.depth = 1;
  CHECK(grow_induced_bfs(path, 0, one).fvs == VertexSet{2});
  Graph empty(4, {});
  CHECK(grow_induced_bfs(empty, 2).fvs == VertexSet{0, 1, 3});
  CHECK_THROWS_AS(grow_induced_bfs(empty, 4), std::out_of_range);
  GrowOptions zero;
  zero.depth = 0;
  CHECK_THROWS_AS(grow_induced_bfs(empty, 0, zero), std::invalid_argument);
}

TEST_CASE("a non-unique neighbour is never kept") {
  // 0 - 1, 0 - 2, 1 - 3, 2 - 3: vertex 3 has two level-one neighbours.
  Graph sq(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto res = grow_induced_bfs(sq, 0);
  CHECK(res.fvs == VertexSet{3});
  CHECK(res.stats.size() == 2);
}

TEST_CASE("directed examples via the underlying graph") {
  Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(fvs_directed(tri, 0).fvs.size() == 1);
  Digraph chain(3, {{0, 1}, {1, 2}});
  CHECK(fvs_directed(chain, 0).fvs.empty());
  Digraph none(3, {});
  CHECK(fvs_directed(none, 1).fvs == VertexSet{0, 2});
}

TEST_CASE("invariants on random graphs, every depth rule") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(120);
    const Graph g = brute::random_graph(n, (0.5 + 6.0 * rng.uniform01()) / static_cast<double>(n), rng);
    const Vertex root = static_cast<Vertex>(rng.below(n));
    GrowOptions opts;
    if (trial % 3 == 1) opts.depth = 1 + static_cast<int>(rng.below(4));
    opts.prune = trial % 2 == 0;
    const auto res = grow_induced_bfs(g, root, opts);
    check_invariants(g, root, res);
    CHECK(grow_induced_bfs(g, root, opts) == res);

    const Digraph d = brute::random_digraph(n, 2.0 / static_cast<double>(n), rng);
    const auto dres = fvs_directed(d, root, opts);
    CHECK(is_acyclic_directed(d, dres.fvs));
  }
}

TEST_CASE("prune only shrinks the feedback vertex set") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = brute::random_graph(80, 0.05, rng);
    const auto plain = grow_induced_bfs(g, 0);
    GrowOptions opts;
    opts.prune = true;
    const auto pruned = grow_induced_bfs(g, 0, opts);
    CHECK(pruned.survivors == plain.survivors);
    CHECK(pruned.fvs.set_union(pruned.restored) == plain.fvs);
    CHECK(is_acyclic_undirected(g, pruned.fvs));
  }
}

TEST_CASE("bound check on synthetic level counts") {
  const std::uint64_t n = 100000;
  const double p = 5e-3;  // c = 500, lemma T = 1
  std::vector<LevelStats> stats{{1, n - 1, 1, 0, 1, 0}, {300, n - 1 - 500, 500, 20, 500, 200}};
  auto rep = check_lemma1_bounds(stats, n, p);
  CHECK(rep.applicable);
  CHECK(rep.lemma_T == 1);
  REQUIRE(rep.levels.size() == 1);
  CHECK(rep.levels[0].u_ok);
  CHECK(rep.levels[0].l_ok);
  CHECK(rep.levels[0].r_ok);
  CHECK(rep.all_pass());
  stats[1].r = 5;  // far below (c - 20 sqrt c) / 4
  CHECK_FALSE(check_lemma1_bounds(stats, n, p).levels[0].r_ok);
  stats[1].r = 2000;  // above c + 20 sqrt c
  CHECK_FALSE(check_lemma1_bounds(stats, n, p).all_pass());
  CHECK(check_lemma1_bounds(stats, n, p).u_bounds_pass());

  const auto low = check_lemma1_bounds(stats, 100000, 1e-3);  // c = 100
  CHECK_FALSE(low.applicable);
  CHECK_FALSE(low.note.empty());
  CHECK_FALSE(low.all_pass());
}

TEST_CASE("acyclic fraction sampler") {
  Rng rng(2);
  const Graph g = brute::random_graph(200, 0.1, rng);
  CHECK(sample_acyclic_fraction(g, 1, 50, 1) == 1.0);
  CHECK(sample_acyclic_fraction(g, 2, 50, 1) == 1.0);
  CHECK(sample_acyclic_fraction(g, 200, 3, 1) == 0.0);
  CHECK(sample_acyclic_fraction(g, 30, 100, 5) == sample_acyclic_fraction(g, 30, 100, 5));
  CHECK_THROWS_AS(sample_acyclic_fraction(g, 201, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_acyclic_fraction(g, 2, 0, 1), std::invalid_argument);
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(sample_acyclic_fraction(tri, 3, 10, 1) == 0.0);
  CHECK(sample_acyclic_fraction(tri, 2, 10, 1) == 1.0);
}
