#pragma once

#include <cstdint>
#include <random>

#include "orient/graph.hpp"

namespace orient {

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// K_n with a maximum matching {0,1}, {2,3}, ... removed.
Graph complete_minus_matching(int n);
/// Random bipartite graph on parts [0, left) and
/// [left, left + right), each cross pair present with probability p.
Graph random_bipartite(int left, int right, double p, std::mt19937_64& rng);
Graph random_gnp(int n, double p, std::mt19937_64& rng);

/// Uniform orientation: each edge flipped with probability 1/2.
Orientation random_orientation(const Graph& g, std::mt19937_64& rng);

/// Bernoulli draw built from the top 53 bits of one engine output, so the
/// sequence does not depend on the standard library's distributions.
bool bernoulli(std::mt19937_64& rng, double p);
/// Uniform integer in [lo, hi], by rejection on one engine output.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace orient
