#pragma once

#include "contractk/graph.hpp"
#include "contractk/oracles.hpp"

#include <random>

namespace contractk {

// Generators draw raw 64-bit words only, so a seed gives the same instance
// on every standard library.

/// Uniform integer in [0, bound).
auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t;

/// True with probability p.
auto coin(std::mt19937_64 & rng, double p) -> bool;

/// Erdős–Rényi graph G(n, p) on ids 0..n-1.
auto random_graph(std::mt19937_64 & rng, std::size_t n, double p) -> Graph;

/// Split graph: a clique of `clique` vertices, the rest independent, each
/// cross pair present with probability p. Vertex labels are shuffled.
auto random_split_graph(std::mt19937_64 & rng, std::size_t n, std::size_t clique, double p) -> Graph;

/// Bipartite instance with each (x, y) pair present with probability p.
auto random_bipartite(std::mt19937_64 & rng, std::size_t xs, std::size_t ys, double p, std::size_t t)
    -> BipartiteInstance;

} // namespace contractk
