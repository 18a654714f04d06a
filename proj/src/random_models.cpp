#include "ihs/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ihs/rng.hpp"

namespace ihs {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

void require_vertex_count(std::uint64_t n) {
  if (n > 0xFFFFFFFFULL) throw std::invalid_argument("n exceeds 32-bit vertex ids");
}

// Visits every pair u < v, in lexicographic order, that succeeds a Bernoulli
// trial with probability q, using either one draw per pair or geometric skips.
template <class OnHit>
void sample_pairs(std::uint64_t n, double q, PairSampling mode, Rng& rng,
                  OnHit&& on_hit) {
  if (n < 2 || q <= 0.0) return;
  if (mode == PairSampling::kNaive || q >= 1.0) {
    for (Vertex u = 0; u + 1 < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.bernoulli(q)) on_hit(u, v);
      }
    }
    return;
  }
  const double log1m_q = std::log1p(-q);
  // (u, v) is the last visited pair; v == u means "before the start of row u".
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  while (true) {
    const std::uint64_t skip = rng.geometric_skip(log1m_q);
    if (skip == ~std::uint64_t{0}) return;
    std::uint64_t steps = skip + 1;
    while (true) {
      const std::uint64_t left_in_row = (n - 1) - v;
      if (steps <= left_in_row) {
        v += steps;
        break;
      }
      steps -= left_in_row;
      ++u;
      if (u + 1 >= n) return;
      v = u;
    }
    on_hit(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
}

}  // namespace

Graph gen_gnp(const ModelParams& params) {
  require_probability(params.p, "p");
  require_vertex_count(params.n);
  Rng rng(params.seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  sample_pairs(params.n, params.p, params.sampling, rng,
               [&](Vertex u, Vertex v) { edges.emplace_back(u, v); });
  return Graph(params.n, std::move(edges));
}

Digraph gen_dnp(const ModelParams& params) {
  require_probability(params.p, "p");
  require_probability(2.0 * params.p, "2p");
  require_vertex_count(params.n);
  Rng rng(params.seed);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  sample_pairs(params.n, 2.0 * params.p, params.sampling, rng, [&](Vertex u, Vertex v) {
    if (rng.coin()) {
      arcs.emplace_back(v, u);
    } else {
      arcs.emplace_back(u, v);
    }
  });
  return Digraph(params.n, std::move(arcs));
}

std::uint64_t planted_size(std::uint64_t n, double delta) {
  return static_cast<std::uint64_t>(std::floor(delta * static_cast<double>(n)));
}

PlantedInstance gen_planted(const ModelParams& params) {
  require_probability(params.p, "p");
  require_vertex_count(params.n);
  if (!(params.delta > 0.0 && params.delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  const std::uint64_t n = params.n;
  const std::uint64_t planted = planted_size(n, params.delta);
  if (planted < 1) throw std::invalid_argument("floor(delta * n) must be at least 1");

  const double cross_p = std::min(1.0, 2.0 * params.p);
  Rng rng(params.seed);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u < planted) {
        if (!rng.bernoulli(cross_p)) continue;
        if (rng.coin()) {
          arcs.emplace_back(v, u);
        } else {
          arcs.emplace_back(u, v);
        }
      } else if (rng.bernoulli(params.p)) {
        arcs.emplace_back(u, v);  // forward in the identity order
      }
    }
  }

  PlantedInstance inst;
  inst.digraph = Digraph(n, std::move(arcs));
  inst.planted = full_set(planted);
  inst.params = params;
  inst.params.sampling = PairSampling::kNaive;
  inst.dag_order.resize(n - planted);
  std::iota(inst.dag_order.begin(), inst.dag_order.end(), static_cast<Vertex>(planted));
  return inst;
}

}  // namespace ihs
