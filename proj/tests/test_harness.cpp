#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "ihs/harness.hpp"

using namespace ihs;

namespace {

std::string csv_without_runtime(const std::vector<RunOutcome>& rows) {
  std::string out;
  for (const auto& o : rows) out += to_csv(o.row, false) + '\n';
  return out;
}

}  // namespace

TEST_CASE("csv header and empty cells") {
  CHECK(csv_header() ==
        "run_id,seed,algorithm,n,p,delta,k,fvs_size,bound_value,acyclic_ok,exact_match,"
        "oracle_calls,cycles_found,runtime_ms");
  ResultRow row;
  row.run_id = "0";
  row.algorithm = "x";
  row.p = 0.005;
  row.acyclic_ok = true;
  row.runtime_ms = 1.5;
  CHECK(to_csv(row) == "0,,x,,0.005,,,,,1,,,,1.5");
  CHECK(to_csv(row, false) == "0,,x,,0.005,,,,,1,,,,");
}

TEST_CASE("seed ranges") {
  CHECK(parse_seed_range("5") == std::vector<std::uint64_t>{5});
  CHECK(parse_seed_range("1..3") == std::vector<std::uint64_t>{1, 2, 3});
  for (const char* bad : {"", "3..1", "a", "1..", "-1", "1..2x", "0..1000000"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_seed_range(bad), std::invalid_argument);
  }
}

TEST_CASE("name parsing") {
  CHECK(parse_model("planted") == Model::kPlanted);
  CHECK(parse_oracle("bfs-cycle") == OracleKind::kBfsCycle);
  CHECK(parse_recipe("lemma1") == Recipe::kLemma1);
  CHECK_THROWS_AS(parse_model("ba"), std::invalid_argument);
  CHECK_THROWS_AS(parse_oracle("dfs"), std::invalid_argument);
  CHECK_THROWS_AS(parse_recipe("theorem3"), std::invalid_argument);
}

TEST_CASE("run_indexed keeps index order for any thread count") {
  auto task = [](std::size_t i) {
    std::this_thread::sleep_for(std::chrono::microseconds((7 * i) % 5 * 100));
    RunOutcome o;
    o.row.run_id = std::to_string(i);
    return o;
  };
  for (unsigned jobs : {1u, 3u, 8u}) {
    const auto out = run_indexed(20, jobs, task);
    REQUIRE(out.size() == 20);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i].row.run_id == std::to_string(i));
  }
  CHECK_THROWS_AS(run_indexed(4, 2, [](std::size_t i) -> RunOutcome {
                    if (i == 2) throw std::runtime_error("boom");
                    return {};
                  }),
                  std::runtime_error);
}

TEST_CASE("solver runners on a triangle") {
  const InstanceFile tri = instance_from(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  const auto fvs = run_solve_fvs(tri, {});
  CHECK(fvs.row.algorithm == "grow-induced-bfs");
  CHECK(fvs.row.fvs_size == 1.0);
  CHECK(fvs.row.acyclic_ok == true);
  GenericRunOptions go;
  go.oracle = OracleKind::kBfsCycle;
  const auto gen = run_solve_generic(tri, go);
  CHECK(gen.row.algorithm == "generic-bfs-cycle");
  CHECK(gen.row.fvs_size == 1.0);
  go.online = true;
  CHECK(run_solve_generic(tri, go).row.algorithm == "online-bfs-cycle");
  CHECK_THROWS_AS(run_solve_planted(tri, {}), std::invalid_argument);
}

TEST_CASE("iteration cap turns into an aborted row") {
  Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  GenericRunOptions go;
  go.max_iterations = 1;
  const auto out = run_solve_generic(instance_from(k5), go);
  CHECK(out.aborted);
  CHECK_FALSE(out.row.fvs_size.has_value());
}

TEST_CASE("generated instances are deterministic in the seed") {
  ModelParams mp;
  mp.n = 60;
  mp.p = 0.1;
  mp.delta = 0.1;
  mp.k = 3;
  mp.seed = 9;
  for (Model m : {Model::kGnp, Model::kDnp, Model::kPlanted}) {
    const auto a = generate_instance(m, mp);
    CHECK(serialize_instance(a) == serialize_instance(generate_instance(m, mp)));
    REQUIRE(a.params.has_value());
    CHECK(a.params->seed == 9);
    CHECK(a.planted.has_value() == (m == Model::kPlanted));
  }
  const auto gnp = generate_instance(Model::kGnp, mp);
  CHECK(gnp.params->delta == 0.0);
  CHECK(gnp.params->k == 0);
}

TEST_CASE("experiments are reproducible across thread counts") {
  ExperimentParams ep;
  ep.n = 2000;
  ep.p = 0.01;
  const auto seeds = parse_seed_range("0..5");
  const auto one = run_experiment(Recipe::kTheorem1, ep, seeds, 1);
  CHECK(one.size() == seeds.size() + 1);
  CHECK(csv_without_runtime(one) == csv_without_runtime(run_experiment(Recipe::kTheorem1, ep, seeds, 4)));
  CHECK(one.back().row.run_id == "aggregate");

  ep.samples = 50;
  ep.r = 300;
  const auto t2 = run_experiment(Recipe::kTheorem2, ep, seeds, 3);
  CHECK(csv_without_runtime(t2) == csv_without_runtime(run_experiment(Recipe::kTheorem2, ep, seeds, 1)));

  ExperimentParams pp;
  pp.n = 100;
  pp.p = 0.6;
  pp.delta = 0.1;
  const auto t5 = run_experiment(Recipe::kTheorem5, pp, parse_seed_range("0..2"), 2);
  CHECK(csv_without_runtime(t5) ==
        csv_without_runtime(run_experiment(Recipe::kTheorem5, pp, parse_seed_range("0..2"), 1)));
  CHECK(t5.back().row.bound_value == 30.0);
}

TEST_CASE("level-bound sweep below the regime starts with a warning row") {
  ExperimentParams ep;
  ep.n = 2000;
  ep.p = 0.01;  // c = 20
  const auto rows = run_experiment(Recipe::kLemma1, ep, {1}, 1);
  REQUIRE(rows.size() == 3);
  CHECK(rows.front().row.run_id == "warning");
  CHECK_FALSE(rows[1].row.exact_match.has_value());
}

TEST_CASE("default subset size and size bound") {
  CHECK(theorem2_default_r(2000, 0.01) == 601);
  CHECK(theorem1_bound(20000, 0.005) == doctest::Approx(20000 - 0.9 * std::log(100.0) / 0.005));
}
