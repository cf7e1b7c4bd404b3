#pragma once

#include "contractk/graph.hpp"
#include "contractk/oracles.hpp"
#include "contractk/solution.hpp"

#include <span>
#include <string>
#include <vector>

namespace contractk {

/**
 * A generated contraction instance. `roles[v]` names the gadget part that
 * vertex v belongs to, e.g. "x:2", "leaf:0:3" or "apex:1". Vertex ids are
 * 0..n-1.
 */
struct GraphArtifact {
    Graph graph;
    std::size_t budget = 0;
    std::vector<std::string> roles;
};

/// A generated bipartite instance; roles cover the X side first, then Y.
struct BipartiteArtifact {
    BipartiteInstance instance;
    std::vector<std::string> roles;
};

/// Partition of the X side of a bipartite instance (side-local indices).
using XPartition = std::vector<std::vector<std::size_t>>;

// --- clique contraction -> split contraction --------------------------------

/// Source vertices become ids 0..n-1 in ascending order, followed by k+2
/// pairwise non-adjacent apex vertices adjacent to every source vertex.
auto gen_split_from_clique(const Graph & g, std::size_t k) -> GraphArtifact;

/// Renames a clique-contraction certificate of (g, k) into the generated graph.
auto lift_clique_to_split(const Graph & g, std::size_t k, const GraphArtifact & target,
                          const ContractionSolution & source) -> ContractionSolution;

// --- red-blue dominating set -> split contraction ---------------------------

/**
 * Layout: x_i = i, y_j = |X| + j, then a clique of |X|+t+3 vertices whose
 * first vertex u is adjacent to all of Y, then |X|+t+1 pendant leaves per x_i.
 * Budget |X|+t. Requires every x to have a neighbour and t <= |X|.
 */
auto gen_split_from_rbds(const BipartiteInstance & inst) -> GraphArtifact;

/// Spanning-tree edges merging u, the chosen Y vertices and all of X.
auto lift_rbds_to_split(const BipartiteInstance & inst, const GraphArtifact & target,
                        const std::vector<std::size_t> & dominators) -> ContractionSolution;

/// Y vertices sharing u's witness set under a split certificate of the target.
auto rbds_from_split(const BipartiteInstance & inst, const GraphArtifact & target, std::span<const Edge> certificate)
    -> std::vector<std::size_t>;

// --- one-sided dominating set -> one-sided domatic number -------------------

/**
 * X' = X followed by |X|-t vertices z adjacent to all of Y; Y' = Y followed
 * by w adjacent to all of X. Target t' = |X|-t+1. Requires 1 <= t <= |X|.
 */
auto gen_osdomatic_from_osds(const BipartiteInstance & inst) -> BipartiteArtifact;

/// One block holding the dominating set and any spare x, plus {x, z} pairs.
auto lift_osds_to_osdomatic(const BipartiteInstance & inst, const std::vector<std::size_t> & dominators)
    -> XPartition;

/// The smallest block of the partition that contains no z vertex.
auto osds_from_osdomatic(const BipartiteInstance & inst, const XPartition & partition) -> std::vector<std::size_t>;

// --- one-sided domatic number -> threshold contraction ----------------------

/**
 * Layout: K = u_0..u_{|X|-1}, then a clique A of 2|X|+1, then an independent
 * B of |X|+1 complete to K, then |X|+1 copies I_l of Y complete to A, with
 * u_i adjacent to the copies of y_j iff x_i y_j is an edge. K and A together
 * form a clique. Budget |X|-t. Requires 1 <= t <= |X|.
 */
auto gen_threshold_from_osdomatic(const BipartiteInstance & inst) -> GraphArtifact;

/// Contracts each block's K vertices into one vertex along a star.
auto lift_osdomatic_to_threshold(const BipartiteInstance & inst, const GraphArtifact & target,
                                 const XPartition & partition) -> ContractionSolution;

/// Whether `partition` splits X into exactly t blocks that each dominate Y.
auto valid_osdomatic_partition(const BipartiteInstance & inst, const XPartition & partition) -> bool;

/// The bipartite graph itself on ids 0..|X|+|Y|-1 (X first).
auto bipartite_graph(const BipartiteInstance & inst) -> Graph;

} // namespace contractk
