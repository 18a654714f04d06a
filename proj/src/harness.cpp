#include "ihs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "ihs/fvs_planted.hpp"
#include "ihs/fvs_random.hpp"
#include "ihs/generic_solver.hpp"
#include "ihs/oracles.hpp"
#include "ihs/rng.hpp"

namespace ihs {

namespace {

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, double>) {
    return format_double(*v);
  } else if constexpr (std::is_same_v<T, bool>) {
    return *v ? "1" : "0";
  } else {
    return std::to_string(*v);
  }
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ResultRow base_row(const InstanceFile& inst, std::string algorithm) {
  ResultRow row;
  row.algorithm = std::move(algorithm);
  row.n = inst.n;
  if (inst.params) {
    row.seed = inst.params->seed;
    row.p = inst.params->p;
    row.delta = inst.params->delta;
    row.k = inst.params->k;
  }
  return row;
}

double edge_density(std::size_t n, std::size_t m) {
  if (n < 2) return 0.0;
  const double nd = static_cast<double>(n);
  return static_cast<double>(m) / (nd * (nd - 1) / 2.0);
}

// Clears the result columns of a row whose solver aborted.
RunOutcome aborted_outcome(ResultRow row, const std::string& message) {
  row.fvs_size.reset();
  row.acyclic_ok.reset();
  row.exact_match.reset();
  row.oracle_calls.reset();
  row.cycles_found.reset();
  return {std::move(row), true, message};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2.0;
}

}  // namespace

std::string csv_header() {
  return "run_id,seed,algorithm,n,p,delta,k,fvs_size,bound_value,acyclic_ok,exact_match,"
         "oracle_calls,cycles_found,runtime_ms";
}

std::string to_csv(const ResultRow& r, bool with_runtime) {
  std::string out;
  for (const std::string& c :
       {r.run_id, cell(r.seed), r.algorithm, cell(r.n), cell(r.p), cell(r.delta), cell(r.k),
        cell(r.fvs_size), cell(r.bound_value), cell(r.acyclic_ok), cell(r.exact_match),
        cell(r.oracle_calls), cell(r.cycles_found)}) {
    out += c;
    out += ',';
  }
  if (with_runtime) out += cell(r.runtime_ms);
  return out;
}

Model parse_model(const std::string& name) {
  if (name == "gnp") return Model::kGnp;
  if (name == "dnp") return Model::kDnp;
  if (name == "planted") return Model::kPlanted;
  throw std::invalid_argument("unknown model '" + name + "' (expected gnp, dnp or planted)");
}

InstanceFile generate_instance(Model model, const ModelParams& params) {
  InstanceFile f;
  switch (model) {
    case Model::kGnp:
      f = instance_from(gen_gnp(params));
      break;
    case Model::kDnp:
      f = instance_from(gen_dnp(params));
      break;
    case Model::kPlanted:
      return instance_from(gen_planted(params));
  }
  ModelParams trailer = params;
  trailer.n = f.n;
  trailer.delta = 0.0;
  trailer.k = 0;
  trailer.sampling = PairSampling::kNaive;
  f.params = trailer;
  return f;
}

RunOutcome run_solve_fvs(const InstanceFile& inst, const FvsRunOptions& opts) {
  Stopwatch clock;
  const bool from_model = inst.params && inst.params->delta == 0.0;
  RunOutcome out;
  if (inst.directed) {
    out.row = base_row(inst, "grow-induced-bfs-directed");
    const Digraph d = inst.digraph();
    GrowOptions go;
    go.prune = opts.prune;
    if (from_model) go.p = 2.0 * inst.params->p;
    const FvsResult res = fvs_directed(d, opts.root, go);
    out.row.fvs_size = static_cast<double>(res.fvs.size());
    out.row.acyclic_ok = is_acyclic_directed(d, res.fvs);
    const double p = from_model ? inst.params->p : edge_density(inst.n, d.num_arcs()) / 2.0;
    const double c = static_cast<double>(inst.n) * p;
    if (p > 0 && c > 1) out.row.bound_value = static_cast<double>(inst.n) - std::log(c) / (2 * p);
  } else {
    out.row = base_row(inst, "grow-induced-bfs");
    const Graph g = inst.graph();
    GrowOptions go;
    go.prune = opts.prune;
    if (from_model) go.p = inst.params->p;
    const FvsResult res = grow_induced_bfs(g, opts.root, go);
    out.row.fvs_size = static_cast<double>(res.fvs.size());
    out.row.acyclic_ok = is_acyclic_undirected(g, res.fvs);
    const double p = from_model ? inst.params->p : edge_density(inst.n, g.num_edges());
    const double c = static_cast<double>(inst.n) * p;
    if (p > 0 && c > 1) out.row.bound_value = static_cast<double>(inst.n) - std::log(c) / p;
  }
  out.row.runtime_ms = clock.elapsed_ms();
  return out;
}

RunOutcome run_solve_planted(const InstanceFile& inst, const PlantedRunOptions& opts) {
  Stopwatch clock;
  if (!inst.directed) throw std::invalid_argument("solve-planted needs a directed instance");
  const Digraph d = inst.digraph();
  int k = 3;
  if (opts.k) {
    k = *opts.k;
  } else if (inst.params && inst.params->k > 0) {
    k = inst.params->k;
  }
  ResultRow row = base_row(inst, "recover-planted");
  row.k = k;
  if (inst.planted) {
    row.bound_value = static_cast<double>(static_cast<std::uint64_t>(k) * inst.planted->size());
  }
  RunOutcome out;
  try {
    const RecoveryReport rep = recover_planted_fvs(d, k, opts.cap, inst.planted);
    row.fvs_size = static_cast<double>(rep.recovered.size());
    row.acyclic_ok = is_acyclic_directed(d, rep.recovered);
    if (rep.exact_match) row.exact_match = *rep.exact_match ? 1.0 : 0.0;
    row.cycles_found = rep.cycles_found;
    out.row = std::move(row);
    out.message = "greedy_set_size=" + std::to_string(rep.greedy_set.size());
  } catch (const CycleCapExceeded& e) {
    out = aborted_outcome(std::move(row), e.what());
  }
  out.row.runtime_ms = clock.elapsed_ms();
  return out;
}

OracleKind parse_oracle(const std::string& name) {
  if (name == "bfs-cycle") return OracleKind::kBfsCycle;
  if (name == "shortest-cycle") return OracleKind::kShortestCycle;
  throw std::invalid_argument("unknown oracle '" + name + "' (expected bfs-cycle or shortest-cycle)");
}

RunOutcome run_solve_generic(const InstanceFile& inst, const GenericRunOptions& opts) {
  Stopwatch clock;
  const std::string oracle_name = opts.oracle == OracleKind::kBfsCycle ? "bfs-cycle" : "shortest-cycle";
  ResultRow row = base_row(inst, (opts.online ? "online-" : "generic-") + oracle_name);

  Graph g;
  Digraph d;
  std::unique_ptr<Oracle> oracle;
  if (inst.directed) {
    if (opts.oracle == OracleKind::kBfsCycle) {
      throw std::invalid_argument("bfs-cycle oracle needs an undirected instance");
    }
    d = inst.digraph();
    oracle = shortest_cycle_oracle(d);
  } else {
    g = inst.graph();
    oracle = opts.oracle == OracleKind::kBfsCycle ? bfs_cycle_oracle(g, opts.root)
                                                  : shortest_cycle_oracle(g);
  }
  auto acyclic = [&](const HittingSet& h) {
    return inst.directed ? is_acyclic_directed(d, h) : is_acyclic_undirected(g, h);
  };

  RunOutcome out;
  try {
    if (opts.online) {
      const OnlineResult res = online_augment(*oracle);
      row.fvs_size = static_cast<double>(res.solution.size());
      row.acyclic_ok = acyclic(res.solution);
      row.oracle_calls = res.oracle_calls;
      row.cycles_found = res.misses;
    } else {
      GenericSolverConfig cfg;
      cfg.max_swap_out = opts.y_max;
      cfg.max_iterations = opts.max_iterations;
      const SolveCertificate cert = generic_solve(*oracle, cfg);
      row.fvs_size = static_cast<double>(cert.solution.size());
      row.acyclic_ok = acyclic(cert.solution);
      row.oracle_calls = cert.oracle_calls;
      row.cycles_found = cert.gamma.size();
    }
    out.row = std::move(row);
  } catch (const SolverAbort& e) {
    out = aborted_outcome(std::move(row), e.what());
  }
  out.row.runtime_ms = clock.elapsed_ms();
  return out;
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    if (s.empty() || s[0] == '-' || s[0] == '+') throw std::invalid_argument("bad seed '" + s + "'");
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad seed '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad seed '" + s + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {number(text)};
  const std::uint64_t a = number(text.substr(0, dots));
  const std::uint64_t b = number(text.substr(dots + 2));
  if (b < a) throw std::invalid_argument("empty seed range '" + text + "'");
  if (b - a >= 1'000'000) throw std::invalid_argument("seed range too long");
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = a;; ++s) {
    seeds.push_back(s);
    if (s == b) break;
  }
  return seeds;
}

std::vector<RunOutcome> run_indexed(std::size_t count, unsigned jobs,
                                    const std::function<RunOutcome(std::size_t)>& task) {
  std::vector<RunOutcome> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

Recipe parse_recipe(const std::string& name) {
  if (name == "theorem1") return Recipe::kTheorem1;
  if (name == "lemma1") return Recipe::kLemma1;
  if (name == "theorem2") return Recipe::kTheorem2;
  if (name == "theorem5") return Recipe::kTheorem5;
  throw std::invalid_argument("unknown recipe '" + name +
                              "' (expected theorem1, lemma1, theorem2 or theorem5)");
}

double theorem1_bound(std::uint64_t n, double p) {
  return static_cast<double>(n) - 0.9 * std::log(static_cast<double>(n) * p) / p;
}

std::uint64_t theorem2_default_r(std::uint64_t n, double p) {
  return static_cast<std::uint64_t>(std::ceil(2.0 / p * std::log(static_cast<double>(n) * p))) + 1;
}

std::vector<RunOutcome> run_experiment(Recipe recipe, const ExperimentParams& ep,
                                       const std::vector<std::uint64_t>& seeds, unsigned jobs) {
  if (seeds.empty()) throw std::invalid_argument("experiment needs at least one seed");
  if (ep.n == 0) throw std::invalid_argument("experiment needs n > 0");
  const char* names[] = {"theorem1", "lemma1", "theorem2", "theorem5"};
  const std::string name = names[static_cast<int>(recipe)];
  const double c = static_cast<double>(ep.n) * ep.p;

  ResultRow proto;
  proto.algorithm = name;
  proto.n = ep.n;
  proto.p = ep.p;
  std::optional<double> bound;
  std::uint64_t r = 0;
  switch (recipe) {
    case Recipe::kTheorem1:
      if (!(c > 1.0)) throw std::invalid_argument("theorem1 needs np > 1");
      bound = theorem1_bound(ep.n, ep.p);
      break;
    case Recipe::kLemma1:
      break;
    case Recipe::kTheorem2:
      if (ep.r) {
        r = *ep.r;
      } else {
        if (!(c > 1.0)) throw std::invalid_argument("theorem2 default r needs np > 1");
        r = theorem2_default_r(ep.n, ep.p);
      }
      if (r > ep.n) throw std::invalid_argument("theorem2 subset size exceeds n");
      if (ep.samples == 0) throw std::invalid_argument("theorem2 needs samples > 0");
      bound = static_cast<double>(r);
      break;
    case Recipe::kTheorem5:
      proto.delta = ep.delta;
      proto.k = ep.k;
      bound = static_cast<double>(static_cast<std::uint64_t>(ep.k) * planted_size(ep.n, ep.delta));
      break;
  }

  std::vector<RunOutcome> out;
  if (recipe == Recipe::kLemma1 && !(c - 20.0 * std::sqrt(c) > 0.0)) {
    RunOutcome warn;
    warn.row = proto;
    warn.row.run_id = "warning";
    warn.message = "lemma1: c - 20 sqrt(c) <= 0, bounds not applicable";
    out.push_back(std::move(warn));
  }

  auto task = [&](std::size_t i) -> RunOutcome {
    Stopwatch clock;
    ModelParams mp;
    mp.n = ep.n;
    mp.p = ep.p;
    mp.seed = seeds[i];
    mp.sampling = PairSampling::kGeometricSkip;
    RunOutcome o;
    o.row = proto;
    o.row.run_id = std::to_string(i);
    o.row.seed = seeds[i];
    o.row.bound_value = bound;
    switch (recipe) {
      case Recipe::kTheorem1: {
        const Graph g = gen_gnp(mp);
        GrowOptions go;
        go.p = ep.p;
        const FvsResult res = grow_induced_bfs(g, ep.root, go);
        o.row.fvs_size = static_cast<double>(res.fvs.size());
        o.row.acyclic_ok = is_acyclic_undirected(g, res.fvs);
        o.row.exact_match = static_cast<double>(res.fvs.size()) <= *bound ? 1.0 : 0.0;
        break;
      }
      case Recipe::kLemma1: {
        const Graph g = gen_gnp(mp);
        GrowOptions go;
        go.p = ep.p;
        const FvsResult res = grow_induced_bfs(g, ep.root, go);
        const Lemma1Report rep = check_lemma1_bounds(res.stats, ep.n, ep.p);
        o.row.fvs_size = static_cast<double>(res.fvs.size());
        o.row.acyclic_ok = is_acyclic_undirected(g, res.fvs);
        o.row.bound_value = static_cast<double>(rep.lemma_T);
        if (rep.applicable) o.row.exact_match = rep.all_pass() ? 1.0 : 0.0;
        o.message = rep.note;
        break;
      }
      case Recipe::kTheorem2: {
        const Graph g = gen_gnp(mp);
        const double frac = sample_acyclic_fraction(g, r, ep.samples, split_seed(seeds[i], 1));
        const auto acyclic = static_cast<std::uint64_t>(std::llround(frac * static_cast<double>(ep.samples)));
        o.row.exact_match = frac;
        o.row.oracle_calls = ep.samples;
        o.row.cycles_found = ep.samples - acyclic;
        break;
      }
      case Recipe::kTheorem5: {
        mp.delta = ep.delta;
        mp.k = ep.k;
        mp.sampling = PairSampling::kNaive;
        const PlantedInstance inst = gen_planted(mp);
        PlantedRunOptions po;
        po.k = ep.k;
        RunOutcome solved = run_solve_planted(instance_from(inst), po);
        solved.row.run_id = o.row.run_id;
        solved.row.algorithm = name;
        o = std::move(solved);
        break;
      }
    }
    o.row.runtime_ms = clock.elapsed_ms();
    return o;
  };
  auto runs = run_indexed(seeds.size(), jobs, task);

  ResultRow agg = proto;
  agg.run_id = "aggregate";
  agg.bound_value = bound;
  std::vector<double> sizes;
  std::vector<double> passes;
  bool all_acyclic = true;
  bool any_acyclic = false;
  std::uint64_t calls = 0;
  std::uint64_t cycles = 0;
  double total_ms = 0;
  for (const auto& run : runs) {
    const ResultRow& row = run.row;
    if (row.fvs_size) sizes.push_back(*row.fvs_size);
    if (row.exact_match) {
      passes.push_back(*row.exact_match);
    } else if (run.aborted) {
      passes.push_back(0.0);
    }
    if (row.acyclic_ok) {
      any_acyclic = true;
      all_acyclic = all_acyclic && *row.acyclic_ok;
    }
    calls += row.oracle_calls.value_or(0);
    cycles += row.cycles_found.value_or(0);
    total_ms += row.runtime_ms.value_or(0);
  }
  if (!sizes.empty()) agg.fvs_size = median(sizes);
  if (!passes.empty()) {
    double sum = 0;
    for (double x : passes) sum += x;
    agg.exact_match = sum / static_cast<double>(passes.size());
  }
  if (any_acyclic) agg.acyclic_ok = all_acyclic;
  if (recipe == Recipe::kTheorem2) {
    agg.oracle_calls = calls;
    agg.cycles_found = cycles;
  }
  if (recipe == Recipe::kTheorem5) agg.cycles_found = cycles;
  agg.runtime_ms = total_ms;

  for (auto& run : runs) out.push_back(std::move(run));
  out.push_back(RunOutcome{std::move(agg), false, {}});
  return out;
}

}  // namespace ihs
