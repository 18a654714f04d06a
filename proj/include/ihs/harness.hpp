#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ihs/instance_io.hpp"
#include "ihs/random_models.hpp"

namespace ihs {

/// One CSV line. Unset optionals print as empty cells.
struct ResultRow {
  std::string run_id;
  std::optional<std::uint64_t> seed;
  std::string algorithm;
  std::optional<std::uint64_t> n;
  std::optional<double> p;
  std::optional<double> delta;
  std::optional<int> k;
  std::optional<double> fvs_size;
  std::optional<double> bound_value;
  std::optional<bool> acyclic_ok;
  std::optional<double> exact_match;  // 0/1 per run, a fraction on aggregate rows
  std::optional<std::uint64_t> oracle_calls;
  std::optional<std::uint64_t> cycles_found;
  std::optional<double> runtime_ms;
};

std::string csv_header();
std::string to_csv(const ResultRow& row, bool with_runtime = true);

enum class Model { kGnp, kDnp, kPlanted };
Model parse_model(const std::string& name);

/// Builds an instance file for the model; the params trailer is always set
/// (delta = 0 and k = 0 for gnp and dnp). Planted instances carry P.
InstanceFile generate_instance(Model model, const ModelParams& params);

/// Outcome of one solver run. `aborted` marks an iteration cap or cycle cap
/// hit; the row then has empty result columns.
struct RunOutcome {
  ResultRow row;
  bool aborted = false;
  std::string message;
};

struct FvsRunOptions {
  Vertex root = 0;
  bool prune = false;
};
RunOutcome run_solve_fvs(const InstanceFile& inst, const FvsRunOptions& opts);

struct PlantedRunOptions {
  std::optional<int> k;  // defaults to the params trailer, then 3
  std::size_t cap = 10'000'000;
};
RunOutcome run_solve_planted(const InstanceFile& inst, const PlantedRunOptions& opts);

enum class OracleKind { kBfsCycle, kShortestCycle };
OracleKind parse_oracle(const std::string& name);

struct GenericRunOptions {
  OracleKind oracle = OracleKind::kShortestCycle;
  std::size_t y_max = 2;
  bool online = false;
  Vertex root = 0;
  std::optional<std::uint64_t> max_iterations;
};
RunOutcome run_solve_generic(const InstanceFile& inst, const GenericRunOptions& opts);

/// Inclusive seed range "a..b" or a single seed "a".
std::vector<std::uint64_t> parse_seed_range(const std::string& text);

/// Evaluates task(i) for i in [0, count) on up to `jobs` threads and returns
/// the results in index order.
std::vector<RunOutcome> run_indexed(std::size_t count, unsigned jobs,
                                    const std::function<RunOutcome(std::size_t)>& task);

enum class Recipe { kTheorem1, kLemma1, kTheorem2, kTheorem5 };
Recipe parse_recipe(const std::string& name);

struct ExperimentParams {
  std::uint64_t n = 0;
  double p = 0.0;
  double delta = 0.0;
  int k = 3;
  std::optional<std::uint64_t> r;  // theorem2 subset size
  std::uint64_t samples = 1000;     // theorem2 subsets per run
  Vertex root = 0;
};

/// Per-seed rows in seed order followed by one aggregate row. A regime
/// warning row may come first. Random graphs for theorem1, lemma1 and
/// theorem2 use geometric-skip sampling; theorem5 uses the planted model.
std::vector<RunOutcome> run_experiment(Recipe recipe, const ExperimentParams& params,
                                       const std::vector<std::uint64_t>& seeds, unsigned jobs = 1);

/// Threshold used by the theorem1 recipe: n - 0.9 (1/p) ln(np).
double theorem1_bound(std::uint64_t n, double p);
/// Default theorem2 subset size: ceil((2/p) ln(np)) + 1.
std::uint64_t theorem2_default_r(std::uint64_t n, double p);

}  // namespace ihs
