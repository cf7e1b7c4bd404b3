#pragma once

#include "contractk/graph.hpp"
#include "contractk/oracles.hpp"
#include "contractk/solution.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace contractk {

/// Counters filled in by the branching solvers. All fields accumulate.
struct SolverStats {
    std::uint64_t branch_nodes = 0;   // search-tree nodes that branched
    std::uint64_t leaves = 0;         // search-tree nodes that did not branch
    std::uint64_t subsolver_calls = 0;
    std::uint64_t contraction_sets = 0; // E' sets tried by split_contraction
    std::uint64_t partitions = 0;       // (R, K_p, I_p) partitions tried
    std::uint64_t max_leaf_r = 0;       // largest |R| at an evaluated threshold leaf
    std::uint64_t kernel_vertices = 0;  // order of the reduced graph, when the twin rules ran
    std::uint64_t max_tree_nodes = 0;   // largest branch-node count of a single threshold tree
};

/**
 * Minimum-size vertex set D with |D| <= d such that g - D is split, found by
 * branching on the vertices of an induced 2K2, C4 or C5 with iterative
 * deepening. Returned ids are ascending.
 */
auto split_vertex_deletion(const Graph & g, std::size_t d) -> std::optional<std::vector<VertexId>>;

/**
 * Contracts g to a complete graph with at most k contractions.
 *
 * Picks a non-adjacent pair x, y of smallest degree sum. Some witness set of
 * any solution contains x or y together with a neighbour, so the search
 * branches on contracting each edge at x and then each edge at y. Edges whose
 * endpoints lie in the same pair of twin classes give isomorphic graphs and
 * are tried once. Disconnected graphs are rejected outright.
 */
auto clique_contraction(const Graph & g, std::size_t k, SolverStats * stats = nullptr)
    -> std::optional<ContractionSolution>;

/**
 * Contracts g to a split graph with at most k contractions.
 *
 * A large split subgraph H = g - D is found first. When its maximal clique
 * has more than 2k vertices the search guesses contractions inside D and a
 * split of the contracted D into merged, clique and independent parts, then
 * hands the clique part to clique_contraction. Otherwise the twin rules
 * shrink g and the edge-subset oracle finishes the job.
 *
 * May throw BudgetTooLarge when the reduced graph is still too large for the
 * oracle under `cap`.
 */
auto split_contraction(const Graph & g, std::size_t k, SolverStats * stats = nullptr,
                       std::uint64_t cap = kDefaultEnumerationCap) -> std::optional<ContractionSolution>;

/// True when g has more twin classes than 2^{4k} + 4k, so no k-solution exists.
auto twin_rule_one(const Graph & g, std::size_t k) -> bool;

/// Shrinks the first twin class larger than 2k+5 to its 2k+5 lowest ids.
/// Returns g unchanged when no class is that large.
auto twin_rule_two_once(const Graph & g, std::size_t k) -> Graph;

/// Applies twin_rule_two_once to every oversized class.
auto twin_rule_two(const Graph & g, std::size_t k) -> Graph;

/**
 * Contracts a split graph g to a threshold graph with at most k contractions.
 * Throws NotSplit when g is not split.
 *
 * The search tree keeps a set T of clique vertices that a later contraction
 * must merge with another clique vertex. It branches five ways on the first
 * induced P4 v1 v2 v3 v4 avoiding T: contract v1v2, v3v4 or v2v3, or put v2
 * (resp. v3) into T. Paths meeting T are settled at the leaves, where an
 * exhaustive search runs over the edges among T, a bounded set R of clique
 * vertices grouped by the T-vertices they form a P4 middle edge with, and one
 * clique vertex u whose closed neighbourhood contains the others.
 */
auto threshold_contraction_split(const Graph & g, std::size_t k, SolverStats * stats = nullptr)
    -> std::optional<ContractionSolution>;

/// Runs the solver for `target`: clique_contraction, split_contraction or
/// threshold_contraction_split.
auto solve_contraction(const Graph & g, std::size_t k, GraphClass target, SolverStats * stats = nullptr,
                       std::uint64_t cap = kDefaultEnumerationCap) -> std::optional<ContractionSolution>;

} // namespace contractk
