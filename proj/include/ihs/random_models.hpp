#pragma once

#include <cstdint>
#include <vector>

#include "ihs/graph.hpp"

namespace ihs {

enum class PairSampling {
  /// One draw per vertex pair, pairs in lexicographic order. Reference mode;
  /// the stream layout is part of the instance format contract.
  kNaive,
  /// Geometric jumps between successes. Same distribution, different stream.
  kGeometricSkip,
};

struct ModelParams {
  std::uint64_t n = 0;
  double p = 0.0;
  double delta = 0.0;  // planted only
  int k = 0;           // planted recovery only
  std::uint64_t seed = 0;
  PairSampling sampling = PairSampling::kNaive;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct PlantedInstance {
  Digraph digraph;
  VertexSet planted;
  ModelParams params;
  /// Order of V \ P in which every arc among those vertices points forward.
  std::vector<Vertex> dag_order;
};

/// G(n, p). Throws std::invalid_argument if p is outside [0, 1].
Graph gen_gnp(const ModelParams& params);

/// D(n, p): each pair joined with probability 2p, then oriented by a fair coin.
/// Throws std::invalid_argument unless 0 <= 2p <= 1.
Digraph gen_dnp(const ModelParams& params);

/// |P| = floor(delta * n) for the planted model.
std::uint64_t planted_size(std::uint64_t n, double delta);

/// Planted model D(n, delta, p) with P = {0, ..., floor(delta n) - 1} and the
/// identity order on V \ P. Pairs touching P are joined with probability
/// min(1, 2p) and oriented by a fair coin; pairs inside V \ P get the forward
/// arc with probability p. Always naive sampling.
PlantedInstance gen_planted(const ModelParams& params);

}  // namespace ihs
