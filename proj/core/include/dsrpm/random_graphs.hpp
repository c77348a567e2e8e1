#pragma once

#include <cstdint>
#include <random>

#include "graph.hpp"

namespace dsrpm {

using Rng = std::mt19937_64;

/// Stream seed for item `index` under a run seed, so each trial's draws are independent of
/// how trials are split across workers.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// G(n, p) with each pair drawn independently.
Graph erdos_renyi(int n, double p, Rng& rng);

/// Erdős–Rényi with p ~ U[0.2, 0.8], redrawn until connected.
Graph random_connected_graph(int n, Rng& rng);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

}  // namespace dsrpm
