// Command-line front end: instance generation, solvers and experiment sweeps.
// Exit codes: 0 success, 2 input error, 3 solver abort.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ihs/fvs_planted.hpp"
#include "ihs/fvs_random.hpp"
#include "ihs/generic_solver.hpp"
#include "ihs/harness.hpp"
#include "ihs/instance_io.hpp"
#include "ihs/oracles.hpp"
#include "ihs/rng.hpp"

namespace {

using namespace ihs;

constexpr int kExitInput = 2;
constexpr int kExitAbort = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::uint64_t n = 0;
  double p = 0.0;
  double delta = 0.0;
  int k = 0;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  std::string in;
  std::string out;
  std::string sampling = "naive";
  Vertex root = 0;
  bool prune = false;
  std::size_t ymax = 2;
  std::string oracle = "shortest-cycle";
  bool online = false;
  std::optional<std::uint64_t> max_iterations;
  std::size_t cap = kDefaultCycleCap;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> r_min, r_max;
  std::uint64_t r_step = 1;
  unsigned jobs = 1;
  std::string recipe;
};

void add_model_options(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "gnp, dnp or planted");
  sub->add_option("--n", o.n, "number of vertices");
  sub->add_option("--p", o.p, "edge or arc probability");
  sub->add_option("--delta", o.delta, "planted fraction");
  sub->add_option("--k", o.k, "cycle length for planted recovery (default 3)");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--sampling", o.sampling, "pair sampling for gnp/dnp: naive or skip");
}

void add_source_options(CLI::App* sub, Options& o) {
  add_model_options(sub, o);
  sub->add_option("--in", o.in, "instance file");
  sub->add_option("--seeds", o.seeds, "seed range a..b");
  sub->add_option("--jobs", o.jobs, "parallel runs")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "CSV output file (default: standard output)");
}

ModelParams model_params(const Options& o, std::uint64_t seed) {
  ModelParams mp;
  mp.n = o.n;
  mp.p = o.p;
  mp.delta = o.delta;
  mp.k = o.k > 0 ? o.k : 3;
  mp.seed = seed;
  if (o.sampling == "naive") {
    mp.sampling = PairSampling::kNaive;
  } else if (o.sampling == "skip") {
    mp.sampling = PairSampling::kGeometricSkip;
  } else {
    throw InputError("--sampling must be naive or skip");
  }
  return mp;
}

std::vector<std::uint64_t> seed_list(const Options& o) {
  if (!o.seeds.empty() && o.seed) throw InputError("give either --seed or --seeds, not both");
  if (!o.seeds.empty()) return parse_seed_range(o.seeds);
  if (o.seed) return {*o.seed};
  throw InputError("a --seed or --seeds value is required");
}

// Instances to solve: the --in file, or one generated instance per seed.
std::vector<std::function<InstanceFile()>> instance_sources(const Options& o) {
  std::vector<std::function<InstanceFile()>> out;
  if (!o.in.empty()) {
    if (!o.model.empty() || o.seed || !o.seeds.empty()) {
      throw InputError("--in cannot be combined with --model, --seed or --seeds");
    }
    auto inst = std::make_shared<InstanceFile>(read_instance_file(o.in));
    out.push_back([inst] { return *inst; });
    return out;
  }
  if (o.model.empty()) throw InputError("give --in or --model");
  const Model model = parse_model(o.model);
  for (std::uint64_t s : seed_list(o)) {
    const ModelParams mp = model_params(o, s);
    out.push_back([model, mp] { return generate_instance(model, mp); });
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int emit_rows(const std::vector<RunOutcome>& runs, const std::string& out_path) {
  Output out(out_path);
  out.stream() << csv_header() << '\n';
  bool aborted = false;
  for (const auto& run : runs) {
    out.stream() << to_csv(run.row) << '\n';
    if (run.aborted) {
      aborted = true;
      std::cerr << "run " << run.row.run_id << " aborted: " << run.message << '\n';
    } else if (run.row.run_id == "warning") {
      std::cerr << "warning: " << run.message << '\n';
    }
  }
  return aborted ? kExitAbort : 0;
}

int solve_all(const Options& o, const std::function<RunOutcome(const InstanceFile&)>& solve) {
  const auto sources = instance_sources(o);
  auto runs = run_indexed(sources.size(), o.jobs, [&](std::size_t i) {
    RunOutcome r = solve(sources[i]());
    r.row.run_id = std::to_string(i);
    return r;
  });
  return emit_rows(runs, o.out);
}

InstanceFile single_instance(const Options& o) {
  if (!o.seeds.empty()) throw InputError("this command takes a single instance; use --seed");
  if (!o.in.empty()) {
    if (!o.model.empty()) throw InputError("--in cannot be combined with --model");
    return read_instance_file(o.in);
  }
  if (o.model.empty()) throw InputError("give --in or --model");
  if (!o.seed) throw InputError("--seed is required");
  return generate_instance(parse_model(o.model), model_params(o, *o.seed));
}

int cmd_generate(const Options& o) {
  if (o.model.empty()) throw InputError("--model is required");
  if (!o.seed) throw InputError("--seed is required");
  const InstanceFile f = generate_instance(parse_model(o.model), model_params(o, *o.seed));
  Output out(o.out);
  out.stream() << serialize_instance(f);
  return 0;
}

int cmd_verify_planted(const Options& o) {
  InstanceFile f = single_instance(o);
  if (!f.directed || !f.planted || !f.params) {
    throw InputError("verify-planted needs a planted instance with planted and params trailers");
  }
  PlantedInstance inst;
  inst.digraph = f.digraph();
  inst.planted = *f.planted;
  inst.params = *f.params;
  if (o.k > 0) inst.params.k = o.k;
  if (inst.params.k < 3) throw InputError("k must be at least 3");
  const std::uint64_t seed = o.seed ? *o.seed : f.params->seed;
  const std::uint64_t samples = o.samples ? o.samples : 5;
  const PlantedDiagnostics d =
      verify_planted_theorems(inst, samples, split_seed(seed, 2), o.cap);
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["planted_size"] = inst.planted.size();
  j["k"] = inst.params.k;
  j["p"] = inst.params.p;
  j["effective_C"] = d.effective_C;
  j["subset_size"] = d.subset_size;
  j["samples"] = d.samples;
  j["checks"] = d.checks;
  j["check_failures"] = d.check_failures;
  j["cycles_found"] = d.recovery.cycles_found;
  j["greedy_set_size"] = d.recovery.greedy_set.size();
  j["greedy_bound"] = d.greedy_bound;
  j["greedy_within_bound"] = d.greedy_within_bound;
  j["recovered_size"] = d.recovery.recovered.size();
  j["exact_match"] = d.recovery.exact_match.value_or(false);
  j["note"] = d.note;
  Output out(o.out);
  out.stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_check_lemma1(const Options& o) {
  const InstanceFile f = single_instance(o);
  if (f.directed) throw InputError("check-lemma1 needs an undirected instance");
  const Graph g = f.graph();
  double p = o.p;
  if (!o.in.empty()) {
    if (f.params) {
      p = f.params->p;
    } else if (f.n >= 2) {
      p = static_cast<double>(g.num_edges()) / (static_cast<double>(f.n) * (f.n - 1) / 2.0);
    }
  }
  GrowOptions go;
  go.p = p;
  const FvsResult res = grow_induced_bfs(g, o.root, go);
  const Lemma1Report rep = check_lemma1_bounds(res.stats, f.n, p);
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["p"] = p;
  j["c"] = static_cast<double>(f.n) * p;
  j["applicable"] = rep.applicable;
  j["lemma_T"] = rep.lemma_T;
  j["depth_cap"] = rep.box_T ? nlohmann::ordered_json(*rep.box_T) : nlohmann::ordered_json();
  j["depth_cap_satisfies_hypothesis"] = rep.box_T_satisfies_hypothesis;
  j["all_pass"] = rep.all_pass();
  j["note"] = rep.note;
  j["fvs_size"] = res.fvs.size();
  j["T_used"] = res.T_used;
  auto& stats = j["stats"] = nlohmann::ordered_json::array();
  for (const LevelStats& s : res.stats) {
    stats.push_back({{"l", s.l}, {"u", s.u}, {"r", s.r}, {"m", s.m}, {"k", s.k}, {"w", s.w}});
  }
  auto& levels = j["levels"] = nlohmann::ordered_json::array();
  for (const Lemma1Level& lv : rep.levels) {
    levels.push_back({{"t", lv.t},
                      {"u", {lv.u_lo, lv.u, lv.u_hi, lv.u_ok}},
                      {"l", {lv.l_lo, lv.l, lv.l_hi, lv.l_ok}},
                      {"r_next", {lv.r_lo, lv.r, lv.r_hi, lv.r_ok}}});
  }
  Output out(o.out);
  out.stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_scan_lowerbound(const Options& o) {
  if (!o.seed) throw InputError("--seed is required");
  Options src = o;
  src.seed.reset();
  InstanceFile f;
  if (!o.in.empty()) {
    f = single_instance(src);
  } else {
    if (o.model != "gnp") throw InputError("scan-lowerbound generates gnp instances only");
    f = generate_instance(Model::kGnp, model_params(o, *o.seed));
  }
  if (f.directed) throw InputError("scan-lowerbound needs an undirected instance");
  const Graph g = f.graph();
  const double p = f.params ? f.params->p : o.p;
  std::uint64_t lo = 0, hi = 0;
  if (o.r) {
    lo = hi = *o.r;
  } else if (o.r_min || o.r_max) {
    if (!o.r_min || !o.r_max) throw InputError("give both --r-min and --r-max");
    lo = *o.r_min;
    hi = *o.r_max;
  } else {
    if (!(p > 0 && f.n * p > 1)) throw InputError("default r needs np > 1; pass --r");
    lo = hi = theorem2_default_r(f.n, p);
  }
  if (lo == 0 || hi < lo || hi > f.n) throw InputError("subset sizes must satisfy 1 <= r <= n");
  if (o.r_step == 0) throw InputError("--r-step must be positive");
  const std::uint64_t samples = o.samples ? o.samples : 1000;
  std::vector<std::uint64_t> rs;
  for (std::uint64_t r = lo; r <= hi; r += o.r_step) rs.push_back(r);
  auto runs = run_indexed(rs.size(), o.jobs, [&](std::size_t i) {
    RunOutcome run;
    ResultRow& row = run.row;
    row.run_id = std::to_string(i);
    row.seed = *o.seed;
    row.algorithm = "scan-lowerbound";
    row.n = f.n;
    row.p = p;
    row.bound_value = static_cast<double>(rs[i]);
    const double frac = sample_acyclic_fraction(g, rs[i], samples, split_seed(*o.seed, rs[i]));
    const auto acyclic = static_cast<std::uint64_t>(std::llround(frac * static_cast<double>(samples)));
    row.exact_match = frac;
    row.oracle_calls = samples;
    row.cycles_found = samples - acyclic;
    return run;
  });
  return emit_rows(runs, o.out);
}

int cmd_experiment(const Options& o) {
  const Recipe recipe = parse_recipe(o.recipe);
  if (!o.in.empty()) throw InputError("experiment recipes generate their own instances");
  ExperimentParams ep;
  ep.n = o.n;
  ep.p = o.p;
  ep.delta = o.delta;
  if (o.k > 0) ep.k = o.k;
  ep.r = o.r;
  if (o.samples) ep.samples = o.samples;
  ep.root = o.root;
  return emit_rows(run_experiment(recipe, ep, seed_list(o), o.jobs), o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicit hitting sets and feedback vertex sets on random graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "write a random instance");
  add_model_options(gen, o);
  gen->add_option("--out", o.out, "instance file (default: standard output)");

  auto* fvs = app.add_subcommand("solve-fvs", "grow an induced BFS tree; report its complement");
  add_source_options(fvs, o);
  fvs->add_option("--root", o.root, "BFS root");
  fvs->add_flag("--prune", o.prune, "re-add FVS vertices while acyclic");

  auto* planted = app.add_subcommand("solve-planted", "recover a planted FVS from short cycles");
  add_source_options(planted, o);
  planted->add_option("--cap", o.cap, "cycle enumeration cap");

  auto* generic = app.add_subcommand("solve-generic", "optimal FVS by implicit hitting set");
  add_source_options(generic, o);
  generic->add_option("--oracle", o.oracle, "bfs-cycle or shortest-cycle");
  generic->add_option("--ymax", o.ymax, "largest swap-out size")->check(CLI::PositiveNumber);
  generic->add_flag("--online", o.online, "online augmentation instead of the exact loop");
  generic->add_option("--root", o.root, "BFS root for the bfs-cycle oracle");
  generic->add_option("--max-iterations", o.max_iterations, "oracle call cap");

  auto* verify = app.add_subcommand("verify-planted", "cycle-through-planted-vertex diagnostics");
  add_model_options(verify, o);
  verify->add_option("--in", o.in, "planted instance file");
  verify->add_option("--samples", o.samples, "sampled subsets (default 5)");
  verify->add_option("--cap", o.cap, "cycle enumeration cap");
  verify->add_option("--out", o.out, "JSON output file");

  auto* lemma = app.add_subcommand("check-lemma1", "per-level concentration bounds");
  add_model_options(lemma, o);
  lemma->add_option("--in", o.in, "undirected instance file");
  lemma->add_option("--root", o.root, "BFS root");
  lemma->add_option("--out", o.out, "JSON output file");

  auto* scan = app.add_subcommand("scan-lowerbound", "acyclic fraction of random r-subsets");
  add_model_options(scan, o);
  scan->add_option("--in", o.in, "undirected instance file");
  scan->add_option("--r", o.r, "subset size");
  scan->add_option("--r-min", o.r_min, "smallest subset size");
  scan->add_option("--r-max", o.r_max, "largest subset size");
  scan->add_option("--r-step", o.r_step, "subset size step");
  scan->add_option("--samples", o.samples, "subsets per size (default 1000)");
  scan->add_option("--jobs", o.jobs, "parallel sizes")->check(CLI::PositiveNumber);
  scan->add_option("--out", o.out, "CSV output file");

  auto* exp = app.add_subcommand("experiment", "seeded sweep with an aggregate row");
  exp->add_option("recipe", o.recipe, "theorem1, lemma1, theorem2 or theorem5")->required();
  add_source_options(exp, o);
  exp->add_option("--r", o.r, "theorem2 subset size");
  exp->add_option("--samples", o.samples, "theorem2 subsets per run (default 1000)");
  exp->add_option("--root", o.root, "BFS root");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*fvs) {
      return solve_all(o, [&](const InstanceFile& f) {
        return run_solve_fvs(f, {o.root, o.prune});
      });
    }
    if (*planted) {
      return solve_all(o, [&](const InstanceFile& f) {
        PlantedRunOptions po;
        if (o.k > 0) po.k = o.k;
        po.cap = o.cap;
        return run_solve_planted(f, po);
      });
    }
    if (*generic) {
      GenericRunOptions go;
      go.oracle = parse_oracle(o.oracle);
      go.y_max = o.ymax;
      go.online = o.online;
      go.root = o.root;
      go.max_iterations = o.max_iterations;
      return solve_all(o, [&](const InstanceFile& f) { return run_solve_generic(f, go); });
    }
    if (*verify) return cmd_verify_planted(o);
    if (*lemma) return cmd_check_lemma1(o);
    if (*scan) return cmd_scan_lowerbound(o);
    if (*exp) return cmd_experiment(o);
  } catch (const SolverAbort& e) {
    std::cerr << "solver aborted: " << e.what() << '\n';
    return kExitAbort;
  } catch (const CycleCapExceeded& e) {
    std::cerr << "solver aborted: " << e.what() << '\n';
    return kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
