#pragma once

#include "contractk/graph.hpp"
#include "contractk/recognition.hpp"
#include "contractk/solution.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace contractk {

/// Default cap on the number of edge subsets an oracle may enumerate.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Cap taken from CONTRACTK_CAP when set and valid, else the default.
auto enumeration_cap_from_env() -> std::uint64_t;

/**
 * Bipartite graph (X, Y; E) with a budget. Vertices are named by their
 * position on their own side; edges are (x, y) pairs.
 */
struct BipartiteInstance {
    std::size_t x_count = 0;
    std::size_t y_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t t = 0;

    auto adjacent(std::size_t x, std::size_t y) const -> bool;
    void validate() const;

    friend auto operator==(const BipartiteInstance &, const BipartiteInstance &) -> bool = default;
};

/// sum_{i<=k} C(m, i), saturating at UINT64_MAX.
auto subsets_up_to(std::uint64_t m, std::uint64_t k) -> std::uint64_t;

/**
 * Minimum-cardinality contraction set of size at most k making g a member of
 * the target class, found by enumerating edge subsets of g by increasing
 * size. Throws BudgetTooLarge when the enumeration would exceed `cap`.
 */
auto oracle_contraction(const Graph & g, std::size_t k, GraphClass target,
                        std::uint64_t cap = kDefaultEnumerationCap) -> std::optional<ContractionSolution>;

struct ExactStats {
    std::uint64_t nodes = 0;
};

/**
 * Exact minimum contraction search for larger instances. Every solution must
 * contract an edge touching any obstruction (an induced forbidden pattern,
 * or a non-adjacent pair for cliques), so the search branches on those edges
 * with iterative deepening. Branches leading to isomorphic graphs through a
 * swap of twin vertices are explored once.
 */
auto exact_contraction(const Graph & g, std::size_t k, GraphClass target, ExactStats * stats = nullptr)
    -> std::optional<ContractionSolution>;

/// Smallest S ⊆ Y, |S| <= t, dominating X (Y-side indices, ascending).
auto oracle_rbds(const BipartiteInstance & inst) -> std::optional<std::vector<std::size_t>>;

/// Smallest S ⊆ X, |S| <= t, dominating Y (X-side indices, ascending).
auto oracle_osds(const BipartiteInstance & inst) -> std::optional<std::vector<std::size_t>>;

/// Partition of X into exactly t blocks, each dominating Y. Requires t >= 1.
auto oracle_osdomatic(const BipartiteInstance & inst) -> std::optional<std::vector<std::vector<std::size_t>>>;

/// Whether every y is adjacent to some x in `xs`.
auto dominates_y(const BipartiteInstance & inst, const std::vector<std::size_t> & xs) -> bool;

/// Whether every x is adjacent to some y in `ys`.
auto dominates_x(const BipartiteInstance & inst, const std::vector<std::size_t> & ys) -> bool;

} // namespace contractk
