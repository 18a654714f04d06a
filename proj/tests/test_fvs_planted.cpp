#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_force.hpp"
#include "ihs/fvs_planted.hpp"
#include "ihs/oracles.hpp"

using namespace ihs;

TEST_CASE("acyclic input: nothing to recover") {
  Digraph dag(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
  const auto rep = recover_planted_fvs(dag, 3);
  CHECK(rep.cycles_found == 0);
  CHECK(rep.greedy_set.empty());
  CHECK(rep.recovered.empty());
  CHECK_FALSE(rep.exact_match.has_value());
  CHECK_THROWS_AS(recover_planted_fvs(dag, 2), std::invalid_argument);
}

TEST_CASE("three triangles through a planted hub") {
  Digraph d(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 0}});
  const auto rep = recover_planted_fvs(d, 3, kDefaultCycleCap, VertexSet{0});
  CHECK(rep.cycles_found == 3);
  CHECK(rep.greedy_set == VertexSet{0, 1, 2});
  CHECK(rep.recovered == VertexSet{0});
  CHECK(rep.exact_match == true);
}

TEST_CASE("2-cycles are enumerated first") {
  Digraph d(4, {{0, 1}, {1, 0}, {2, 3}, {3, 1}, {1, 2}});
  // Cycles: [0,1] (length 2) and [1,2,3] (length 3). Greedy takes {0,1}.
  const auto rep = recover_planted_fvs(d, 3);
  CHECK(rep.cycles_found == 2);
  CHECK(rep.greedy_set == VertexSet{0, 1});
  // 1 closes the 3-cycle with {2, 3}; 0 lies on no 3-cycle.
  CHECK(rep.recovered == VertexSet{1});
}

TEST_CASE("cycle cap aborts") {
  Digraph d(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 0}});
  CHECK_THROWS_AS(recover_planted_fvs(d, 3, 2), CycleCapExceeded);
  CHECK_NOTHROW(recover_planted_fvs(d, 3, 3));
}

TEST_CASE("recovered set sits inside the greedy set, which hits every short cycle") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    const Digraph d = brute::random_digraph(n, 0.35, rng);
    const int k = 3 + static_cast<int>(rng.below(2));
    const auto rep = recover_planted_fvs(d, k);
    CHECK(rep.recovered.set_difference(rep.greedy_set).empty());
    std::uint64_t count = 0;
    for (int len = 2; len <= k; ++len) {
      for (const auto& c : brute::k_cycles(d, len)) {
        ++count;
        CHECK(VertexSet(c).intersects(rep.greedy_set));
      }
    }
    CHECK(rep.cycles_found == count);
  }
}

TEST_CASE("planted model instances are recovered exactly") {
  int exact = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    ModelParams mp;
    mp.n = 200;
    mp.delta = 0.05;
    mp.p = 0.5;
    mp.k = 3;
    mp.seed = seed;
    const auto inst = gen_planted(mp);
    const auto rep = recover_planted_fvs(inst.digraph, 3, kDefaultCycleCap, inst.planted);
    CHECK(rep.greedy_set.size() <= 3 * inst.planted.size());
    if (*rep.exact_match) {
      ++exact;
      CHECK(is_acyclic_directed(inst.digraph, rep.recovered));
      CHECK(rep.recovered.size() == planted_size(200, 0.05));
    }
  }
  CHECK(exact >= 4);
}

TEST_CASE("diagnostics flag p = 0") {
  ModelParams mp;
  mp.n = 50;
  mp.delta = 0.1;
  mp.p = 0.0;
  mp.k = 3;
  mp.seed = 1;
  const auto diag = verify_planted_theorems(gen_planted(mp), 3, 9);
  CHECK(diag.check_failures == diag.checks);
  CHECK(diag.checks == 15);
  CHECK_FALSE(diag.cycles_through_all());
  CHECK(diag.note.find("violated") != std::string::npos);
  CHECK(diag.subset_size == 5);
  CHECK(diag.greedy_within_bound);
}

TEST_CASE("diagnostics pass inside the regime") {
  ModelParams mp;
  mp.n = 400;
  mp.delta = 0.1;
  mp.p = 0.6;
  mp.k = 3;
  mp.seed = 3;
  const auto diag = verify_planted_theorems(gen_planted(mp), 5, 4);
  CHECK(diag.cycles_through_all());
  CHECK(diag.note.empty());
  CHECK(diag.greedy_bound == 120);
  CHECK(diag.greedy_within_bound);
  CHECK(diag.recovery.exact_match == true);
}
