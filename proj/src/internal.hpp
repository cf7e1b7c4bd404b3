#pragma once

#include "contractk/graph.hpp"
#include "contractk/recognition.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace contractk::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    auto find(std::uint32_t x) -> std::uint32_t
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if a and b were already joined.
    auto unite(std::uint32_t a, std::uint32_t b) -> bool
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (a < b)
            parent_[b] = a;
        else
            parent_[a] = b;
        return true;
    }

    /// Block label per element, blocks numbered in order of smallest member.
    auto labels(std::size_t & count) -> std::vector<std::uint32_t>;

private:
    std::vector<std::uint32_t> parent_;
};

/// Quotient by a labelling of vertex indices (blocks numbered by smallest member).
auto contract_labels(const Graph & g, std::span<const std::uint32_t> labels, std::size_t blocks) -> Contraction;

/// Same as contract_labels but without building the vertex map.
auto contract_labels_graph(const Graph & g, std::span<const std::uint32_t> labels, std::size_t blocks) -> Graph;

/// Index of the lowest set bit at or after `from` in a row, or npos.
inline auto next_bit(std::span<const Graph::Word> row, std::size_t from) -> std::size_t
{
    auto w = from / 64;
    if (w >= row.size())
        return static_cast<std::size_t>(-1);
    auto bits = row[w] & (~Graph::Word{0} << (from % 64));
    while (true) {
        if (bits != 0)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w >= row.size())
            return static_cast<std::size_t>(-1);
        bits = row[w];
    }
}

/// Lowest original edge between the witness sets of two current vertices.
auto lift_edge(const Graph & original, const VertexMap & map, VertexId a, VertexId b) -> Edge;

/**
 * Tracks a sequence of contractions applied to an original graph, keeping
 * the current graph, the original-to-current map and the original edges
 * realising each contraction.
 */
class ContractionTracker {
public:
    explicit ContractionTracker(const Graph & original);

    auto original() const -> const Graph & { return *original_; }
    auto current() const -> const Graph & { return current_; }
    auto map() const -> const VertexMap & { return map_; }
    auto lifted() const -> const std::vector<Edge> & { return lifted_; }

    /// Contracts an edge of the current graph.
    void contract(Edge current_edge);

    /// Contracts an edge named by original ids (resolved through the map).
    void contract_original(Edge original_edge);

private:
    const Graph * original_;
    Graph current_;
    VertexMap map_;
    std::vector<Edge> lifted_;
};

/// Twin-class representative per vertex index. Two vertices share a value iff
/// they have equal open or equal closed neighbourhoods.
auto twin_classes(const Graph & g) -> std::vector<std::size_t>;

/// Keeps the first edge (in the given order) of every pair of twin classes.
auto dedup_by_twins(const Graph & g, std::span<const std::pair<std::size_t, std::size_t>> candidates)
    -> std::vector<Edge>;

/// Canonical block labelling of the original vertices under a map.
auto partition_key(const VertexMap & map) -> std::string;

/**
 * First subset of `candidates` (edges of g, by increasing size, then
 * lexicographically by position) of size at most k whose contraction puts g
 * in the target class. Subsets containing a cycle are skipped since a smaller
 * subset yields the same quotient.
 */
auto first_contraction_subset(const Graph & g, std::span<const Edge> candidates, std::size_t k, GraphClass target)
    -> std::optional<std::vector<Edge>>;

} // namespace contractk::detail
