#pragma once

#include "contractk/recognition.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace contractk {

/// One cell of a bench grid. `agree` counts solver/oracle (or source/target) matches.
struct BenchRow {
    std::string label;
    std::uint64_t instances = 0;
    std::uint64_t agree = 0;
    std::uint64_t yes = 0;
    std::uint64_t certified = 0; // YES answers whose certificate verified
    std::uint64_t nodes = 0;     // solver branch nodes summed over the cell
    double millis = 0;
};

/// Calls fn on every labeled graph with vertex set 0..n-1.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph &)> & fn);

/// Every labeled graph with 1..max_n vertices (split graphs only for threshold)
/// against the oracle, one row per (n, k).
auto bench_exhaustive(GraphClass target, std::size_t max_n, std::size_t max_k, std::uint64_t cap)
    -> std::vector<BenchRow>;

/// `count` random split graphs on n vertices per k in 0..max_k.
auto bench_random_split(GraphClass target, std::size_t n, std::size_t max_k, std::size_t count, std::uint64_t seed,
                        std::uint64_t cap) -> std::vector<BenchRow>;

/// Round trip of the four constructions over every bipartite instance with
/// |X| <= max_x, |Y| <= max_y and every admissible t. One row per construction.
auto bench_reductions(std::size_t max_x, std::size_t max_y) -> std::vector<BenchRow>;

} // namespace contractk
