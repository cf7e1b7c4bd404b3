#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace contractk {

/// Opaque vertex identity. Ids survive contraction; merged vertices get fresh ids.
using VertexId = std::uint32_t;

/// Unordered edge stored as (min, max).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    constexpr Edge() = default;
    constexpr Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Simple undirected graph over a sorted set of vertex ids.
 *
 * Adjacency is stored as one bit row per vertex, rows indexed by the
 * position of the id in the sorted id list. Fresh ids are always larger
 * than every id seen so far, so appending keeps the list sorted and index
 * order coincides with id order.
 */
class Graph {
public:
    using Word = std::uint64_t;

    Graph() = default;

    /// Edgeless graph on ids 0..n-1.
    explicit Graph(std::size_t n);

    /// Graph on ids 0..n-1 with the given edges.
    Graph(std::size_t n, std::span<const Edge> edges);

    /// Edgeless graph on the given ids (sorted and deduplicated).
    static auto on_vertices(std::vector<VertexId> ids) -> Graph;

    auto order() const -> std::size_t { return ids_.size(); }
    auto size() const -> std::size_t { return edge_count_; }
    auto vertices() const -> std::span<const VertexId> { return ids_; }
    auto vertex(std::size_t index) const -> VertexId { return ids_[index]; }
    auto next_id() const -> VertexId { return next_id_; }

    auto find(VertexId v) const -> std::optional<std::size_t>;
    auto index_of(VertexId v) const -> std::size_t;
    auto contains(VertexId v) const -> bool { return find(v).has_value(); }

    auto adjacent(VertexId a, VertexId b) const -> bool;
    auto adjacent_at(std::size_t i, std::size_t j) const -> bool
    {
        return (adj_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    auto has_edge(Edge e) const -> bool;

    auto degree(VertexId v) const -> std::size_t { return degree_at(index_of(v)); }
    auto degree_at(std::size_t i) const -> std::size_t;
    auto neighbors(VertexId v) const -> std::vector<VertexId>;
    auto neighbor_indices(std::size_t i) const -> std::vector<std::size_t>;

    /// All edges in ascending (u, v) order.
    auto edges() const -> std::vector<Edge>;

    /// Adds uv; throws on self-loops and unknown ids. Existing edges are ignored.
    void add_edge(VertexId a, VertexId b);
    void add_edge_at(std::size_t i, std::size_t j);

    /// Appends a vertex with a fresh id.
    auto add_vertex() -> VertexId;

    /// Subgraph induced by the listed ids; ids are preserved.
    auto induced(std::span<const VertexId> keep) const -> Graph;

    /// Subgraph induced by all vertices except the listed ones.
    auto without(std::span<const VertexId> drop) const -> Graph;

    auto words() const -> std::size_t { return words_; }
    auto row(std::size_t i) const -> std::span<const Word>
    {
        return {adj_.data() + i * words_, words_};
    }

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a.ids_ == b.ids_ && a.adj_ == b.adj_;
    }

private:
    void reset(std::vector<VertexId> ids, VertexId next_id);

    std::vector<VertexId> ids_;
    std::vector<Word> adj_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    VertexId next_id_ = 0;

    friend class GraphBuilder;
};

/// Builds a graph from index-level adjacency with explicit ids.
class GraphBuilder {
public:
    GraphBuilder(std::vector<VertexId> sorted_ids, VertexId next_id);

    void connect(std::size_t i, std::size_t j);
    void or_row(std::size_t i, std::span<const Graph::Word> bits);
    auto build() && -> Graph;

private:
    Graph graph_;
};

/// Mapping from the vertices of an original graph to the vertices of a contracted one.
class VertexMap {
public:
    VertexMap() = default;

    static auto identity(const Graph & g) -> VertexMap;

    /// Image of an original vertex; throws UnknownVertex if absent.
    auto operator()(VertexId original) const -> VertexId;
    auto contains(VertexId original) const -> bool;

    void set(VertexId original, VertexId image);
    auto domain() const -> std::vector<VertexId>;
    auto image() const -> std::vector<VertexId>;
    auto entries() const -> std::span<const std::pair<VertexId, VertexId>> { return entries_; }

    /// (next ∘ this): first apply this map, then next.
    auto then(const VertexMap & next) const -> VertexMap;

    friend auto operator==(const VertexMap &, const VertexMap &) -> bool = default;

private:
    std::vector<std::pair<VertexId, VertexId>> entries_;
};

struct Contraction {
    Graph graph;
    VertexMap map;
};

/// Partition of V(G) into witness sets. Blocks are ordered by smallest member.
struct WitnessStructure {
    std::vector<std::vector<VertexId>> blocks;

    friend auto operator==(const WitnessStructure &, const WitnessStructure &) -> bool = default;
};

/// Contracts a single edge; the merged vertex receives g.next_id().
auto contract_edge(const Graph & g, Edge e) -> Contraction;

/// Contracts the edges of f (named by ids of g) one after another.
auto contract_edges(const Graph & g, std::span<const Edge> f) -> Contraction;

/// Components of the spanning subgraph (V(g), f).
auto witness_from_edges(const Graph & g, std::span<const Edge> f) -> WitnessStructure;

/// One vertex per block, adjacent iff a cross edge exists. Singleton blocks keep
/// their id; larger blocks get fresh ids in block order.
auto quotient(const Graph & g, const WitnessStructure & w) -> Graph;
auto quotient_with_map(const Graph & g, const WitnessStructure & w) -> Contraction;

auto is_connected(const Graph & g) -> bool;

enum class Pattern { TwoK2, C4, C5, P4 };

auto pattern_name(Pattern p) -> const char *;
auto pattern_order(Pattern p) -> std::size_t;

inline constexpr Pattern kSplitObstructions[] = {Pattern::TwoK2, Pattern::C4, Pattern::C5};
inline constexpr Pattern kThresholdObstructions[] = {Pattern::TwoK2, Pattern::C4, Pattern::P4};

struct ForbiddenOccurrence {
    Pattern pattern;
    /// Path order for P4, cycle order for C4/C5, (a, b, c, d) with edges ab, cd for 2K2.
    std::vector<VertexId> vertices;

    friend auto operator==(const ForbiddenOccurrence &, const ForbiddenOccurrence &) -> bool = default;
};

/**
 * First induced occurrence of a pattern from the family. Vertex subsets are
 * scanned by size (4 then 5) and then lexicographically by sorted id tuple.
 */
auto find_forbidden(const Graph & g, std::span<const Pattern> family) -> std::optional<ForbiddenOccurrence>;

/// Which pattern (if any) the listed vertices induce.
auto classify_induced(const Graph & g, std::span<const VertexId> vs) -> std::optional<Pattern>;

/// Classes of vertices with identical open neighbourhoods, ordered by smallest member.
auto twin_partition(const Graph & g) -> std::vector<std::vector<VertexId>>;

} // namespace contractk
