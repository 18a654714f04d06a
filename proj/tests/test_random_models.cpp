#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ihs/random_models.hpp"
#include "ihs/rng.hpp"

using namespace ihs;

namespace {

ModelParams params(std::uint64_t n, double p, std::uint64_t seed,
                   PairSampling mode = PairSampling::kNaive) {
  ModelParams mp;
  mp.n = n;
  mp.p = p;
  mp.seed = seed;
  mp.sampling = mode;
  return mp;
}

}  // namespace

TEST_CASE("Rng draws are reproducible and in range") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  CHECK(split_seed(1, 0) != split_seed(1, 1));
  CHECK(split_seed(1, 0) == split_seed(1, 0));
}

TEST_CASE("generators reject bad parameters") {
  CHECK_THROWS_AS(gen_gnp(params(10, -0.1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp(params(10, 1.5, 1)), std::invalid_argument);
  CHECK_THROWS_AS(gen_dnp(params(10, 0.6, 1)), std::invalid_argument);
  ModelParams mp = params(10, 0.1, 1);
  mp.delta = 0.0;
  CHECK_THROWS_AS(gen_planted(mp), std::invalid_argument);
  mp.delta = 0.05;  // floor(0.5) = 0
  CHECK_THROWS_AS(gen_planted(mp), std::invalid_argument);
}

TEST_CASE("edge cases p = 0 and p = 1") {
  for (auto mode : {PairSampling::kNaive, PairSampling::kGeometricSkip}) {
    CHECK(gen_gnp(params(10, 0.0, 3, mode)).num_edges() == 0);
    CHECK(gen_gnp(params(10, 1.0, 3, mode)).num_edges() == 45);
    CHECK(gen_dnp(params(10, 0.5, 3, mode)).num_arcs() == 45);
  }
  CHECK(gen_gnp(params(1, 0.5, 3)).num_edges() == 0);
  CHECK(gen_gnp(params(0, 0.5, 3)).num_vertices() == 0);
}

TEST_CASE("same seed gives the same graph, another seed differs") {
  for (auto mode : {PairSampling::kNaive, PairSampling::kGeometricSkip}) {
    CHECK(gen_gnp(params(300, 0.05, 42, mode)) == gen_gnp(params(300, 0.05, 42, mode)));
    CHECK_FALSE(gen_gnp(params(300, 0.05, 42, mode)) == gen_gnp(params(300, 0.05, 43, mode)));
    CHECK(gen_dnp(params(300, 0.05, 42, mode)) == gen_dnp(params(300, 0.05, 42, mode)));
  }
}

TEST_CASE("edge counts within five standard deviations") {
  const std::uint64_t n = 2000;
  const double pairs = n * (n - 1) / 2.0;
  for (auto mode : {PairSampling::kNaive, PairSampling::kGeometricSkip}) {
    const double p = 0.01;
    const double m = static_cast<double>(gen_gnp(params(n, p, 7, mode)).num_edges());
    CHECK(std::abs(m - pairs * p) <= 5 * std::sqrt(pairs * p * (1 - p)));

    const Digraph d = gen_dnp(params(n, p, 8, mode));
    const double a = static_cast<double>(d.num_arcs());
    const double q = 2 * p;
    CHECK(std::abs(a - pairs * q) <= 5 * std::sqrt(pairs * q * (1 - q)));
    double forward = 0;
    for (const auto& [u, v] : d.arcs()) forward += u < v;
    CHECK(std::abs(forward - a / 2) <= 5 * std::sqrt(a / 4));
  }
}

TEST_CASE("geometric skip and naive sampling agree per pair") {
  const std::uint64_t n = 40;
  const double p = 0.15;
  const int reps = 600;
  std::vector<int> naive(n * n, 0), skip(n * n, 0);
  double naive_total = 0, skip_total = 0;
  for (int s = 0; s < reps; ++s) {
    for (const auto& [u, v] : gen_gnp(params(n, p, 1000 + s)).edges()) ++naive[u * n + v];
    for (const auto& [u, v] : gen_gnp(params(n, p, 5000 + s, PairSampling::kGeometricSkip)).edges()) {
      ++skip[u * n + v];
    }
  }
  const double sd = std::sqrt(reps * p * (1 - p));
  int outliers = 0;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      naive_total += naive[u * n + v];
      skip_total += skip[u * n + v];
      // Difference of two independent binomials: sd * sqrt(2).
      if (std::abs(naive[u * n + v] - skip[u * n + v]) > 5 * sd * std::sqrt(2.0)) ++outliers;
    }
  }
  CHECK(outliers == 0);
  const double pairs = n * (n - 1) / 2.0;
  const double total_sd = std::sqrt(2.0 * reps * pairs * p * (1 - p));
  CHECK(std::abs(naive_total - skip_total) <= 5 * total_sd);
}

TEST_CASE("planted model structure") {
  ModelParams mp = params(120, 0.2, 4);
  mp.delta = 0.1;
  mp.k = 3;
  const PlantedInstance inst = gen_planted(mp);
  CHECK(planted_size(120, 0.1) == 12);
  CHECK(inst.planted == full_set(12));
  CHECK(inst.dag_order.size() == 108);
  CHECK(is_acyclic_directed(inst.digraph, inst.planted));
  for (const auto& [u, v] : inst.digraph.arcs()) {
    CHECK_FALSE(inst.digraph.has_arc(v, u));
    if (u >= 12 && v >= 12) CHECK(u < v);
  }
  CHECK(gen_planted(mp).digraph == inst.digraph);
}

TEST_CASE("planted model with 2p > 1 joins every pair touching P") {
  ModelParams mp = params(60, 0.6, 2);
  mp.delta = 0.1;
  const PlantedInstance inst = gen_planted(mp);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = 0; v < 60; ++v) {
      if (u != v) CHECK((inst.digraph.has_arc(u, v) || inst.digraph.has_arc(v, u)));
    }
  }
}

TEST_CASE("planted arc densities within five standard deviations") {
  ModelParams mp = params(600, 0.05, 9);
  mp.delta = 0.1;
  const PlantedInstance inst = gen_planted(mp);
  double inside = 0, cross = 0;
  for (const auto& [u, v] : inst.digraph.arcs()) ((u < 60 || v < 60) ? cross : inside) += 1;
  const double inside_pairs = 540.0 * 539 / 2;
  const double cross_pairs = 600.0 * 599 / 2 - inside_pairs;
  CHECK(std::abs(inside - inside_pairs * 0.05) <= 5 * std::sqrt(inside_pairs * 0.05 * 0.95));
  CHECK(std::abs(cross - cross_pairs * 0.1) <= 5 * std::sqrt(cross_pairs * 0.1 * 0.9));
}
