#pragma once

#include "contractk/graph.hpp"

#include <optional>
#include <vector>

namespace contractk {

/// Clique side and independent side of a split graph. The clique side is maximal.
struct SplitPartition {
    std::vector<VertexId> clique;
    std::vector<VertexId> independent;

    friend auto operator==(const SplitPartition &, const SplitPartition &) -> bool = default;
};

/// Clique side ordered by growing closed neighbourhoods, independent side by shrinking open ones.
struct ThresholdOrdering {
    std::vector<VertexId> clique_order;
    std::vector<VertexId> independent_order;
};

struct SplitCheck {
    bool split = false;
    std::optional<SplitPartition> partition;
    std::optional<ForbiddenOccurrence> witness;
};

struct ThresholdCheck {
    bool threshold = false;
    std::optional<ThresholdOrdering> ordering;
    std::optional<ForbiddenOccurrence> witness;
};

enum class GraphClass { Split, Threshold, Clique };

auto class_name(GraphClass c) -> const char *;

/// Split test with certificate: a partition when split, an induced 2K2/C4/C5 otherwise.
auto is_split(const Graph & g) -> SplitCheck;

/// Throws NotSplit if g is not split. Ties are resolved towards lower ids.
auto split_partition_max_clique(const Graph & g) -> SplitPartition;

auto is_threshold(const Graph & g) -> ThresholdCheck;

auto is_clique(const Graph & g) -> bool;

// Certificate-free predicates for hot loops.
auto is_split_graph(const Graph & g) -> bool;
auto is_threshold_graph(const Graph & g) -> bool;
auto in_class(const Graph & g, GraphClass c) -> bool;

/// Checks the three split-partition invariants directly.
auto valid_split_partition(const Graph & g, const SplitPartition & p) -> bool;

/// Checks both nested-neighbourhood chains directly.
auto valid_threshold_ordering(const Graph & g, const ThresholdOrdering & o) -> bool;

} // namespace contractk
