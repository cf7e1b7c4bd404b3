#include "contractk/fpt.hpp"

#include "contractk/errors.hpp"
#include "contractk/recognition.hpp"
#include "internal.hpp"

#include <array>
#include <map>

namespace contractk {

namespace {

using Path = std::array<VertexId, 4>;

struct Node {
    detail::ContractionTracker tracker;
    std::size_t k;
    std::vector<VertexId> touched; // T, ascending; never merged by the tree itself
};

void insert_sorted(std::vector<VertexId> & v, VertexId x)
{
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x)
        v.insert(it, x);
}

auto on_path(const Path & p, VertexId v) -> bool
{
    return std::find(p.begin(), p.end(), v) != p.end();
}

/// A path through a vertex of T is left to the leaf search.
auto is_marked(const Node & node, const Path & p) -> bool
{
    return std::any_of(node.touched.begin(), node.touched.end(), [&](VertexId t) { return on_path(p, t); });
}

/// Whether some induced P4 of g uses the edge between indices a and b as its middle edge.
auto middle_of_p4(const Graph & g, std::size_t a, std::size_t b) -> bool
{
    auto n = g.order();
    for (std::size_t x = 0; x < n; ++x) {
        if (x == b || !g.adjacent_at(x, a) || g.adjacent_at(x, b))
            continue;
        for (std::size_t y = 0; y < n; ++y)
            if (y != a && y != x && g.adjacent_at(y, b) && !g.adjacent_at(y, a) && !g.adjacent_at(x, y))
                return true;
    }
    return false;
}

/// Lexicographically least induced P4 (v1, v2, v3, v4) with v1 < v4 avoiding T.
auto first_unmarked_p4(const Node & node) -> std::optional<Path>
{
    const auto & g = node.tracker.current();
    auto n = g.order();
    std::optional<Path> best;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
            if (b == c || !g.adjacent_at(b, c))
                continue;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == c || !g.adjacent_at(a, b) || g.adjacent_at(a, c))
                    continue;
                if (best && g.vertex(a) > (*best)[0])
                    break;
                for (std::size_t d = a + 1; d < n; ++d) {
                    if (d == b || !g.adjacent_at(d, c) || g.adjacent_at(d, b) || g.adjacent_at(a, d))
                        continue;
                    Path p{g.vertex(a), g.vertex(b), g.vertex(c), g.vertex(d)};
                    if ((!best || p < *best) && !is_marked(node, p))
                        best = p;
                }
            }
        }
    return best;
}

auto with_contraction(const Node & node, Edge e) -> Node
{
    Node child = node;
    auto fresh = child.tracker.current().next_id();
    child.tracker.contract(e);
    child.k -= 1;
    // The branching path avoids T, so this only matters as a safeguard.
    for (auto & v : child.touched)
        if (v == e.u || v == e.v)
            v = fresh;
    std::sort(child.touched.begin(), child.touched.end());
    child.touched.erase(std::unique(child.touched.begin(), child.touched.end()), child.touched.end());
    return child;
}

auto with_touched(const Node & node, VertexId v) -> Node
{
    Node child = node;
    insert_sorted(child.touched, v);
    return child;
}

struct ThresholdSearch {
    const Graph & root;
    std::vector<VertexId> clique; // K of the root partition
    SolverStats * stats;
    std::uint64_t tree_nodes = 0;

    auto leaf(const Node & node) -> std::optional<std::vector<Edge>>
    {
        if (stats)
            ++stats->leaves;
        if (first_unmarked_p4(node) || node.touched.size() > 2 * node.k)
            return std::nullopt;

        const auto & g = node.tracker.current();
        const auto & map = node.tracker.map();
        const auto & t = node.touched;
        auto k = node.k;

        std::vector<VertexId> rest; // K' - T'
        for (auto v : clique)
            insert_sorted(rest, map(v));
        std::erase_if(rest, [&](VertexId v) { return std::binary_search(t.begin(), t.end(), v); });

        auto closed_within = [&](VertexId small, VertexId big) {
            auto i = g.index_of(small), j = g.index_of(big);
            for (std::size_t x = 0; x < g.order(); ++x)
                if ((x == i || g.adjacent_at(i, x)) && x != j && !g.adjacent_at(j, x))
                    return false;
            return true;
        };
        std::optional<VertexId> u;
        for (auto cand : rest)
            if (std::all_of(rest.begin(), rest.end(), [&](VertexId w) { return closed_within(w, cand); })) {
                u = cand;
                break;
            }
        if (!rest.empty() && !u)
            throw InternalInvariantViolation("no clique vertex outside T dominates the others at a leaf");

        std::map<std::vector<VertexId>, std::vector<VertexId>> groups;
        for (auto w : rest) {
            std::vector<VertexId> pw;
            for (auto v : t)
                if (g.adjacent(w, v) && middle_of_p4(g, g.index_of(w), g.index_of(v)))
                    pw.push_back(v);
            if (!pw.empty())
                groups[pw].push_back(w);
        }
        std::vector<VertexId> keep = t;
        std::size_t r_size = 0;
        for (auto & [pw, members] : groups) {
            std::stable_sort(members.begin(), members.end(),
                             [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
            if (members.size() > 2 * k + 1)
                members.resize(2 * k + 1);
            r_size += members.size();
            keep.insert(keep.end(), members.begin(), members.end());
        }
        if (stats)
            stats->max_leaf_r = std::max<std::uint64_t>(stats->max_leaf_r, r_size);
        if (2 * k < 64 && r_size > (2 * k + 1) * (std::uint64_t{1} << (2 * k)))
            throw InternalInvariantViolation("leaf set R exceeds (2k'+1)*2^(2k')");
        if (u)
            keep.push_back(*u);
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

        std::vector<Edge> candidates;
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a + 1; b < keep.size(); ++b)
                if (g.adjacent(keep[a], keep[b]))
                    candidates.emplace_back(keep[a], keep[b]);
        auto local = detail::first_contraction_subset(g, candidates, k, GraphClass::Threshold);
        if (!local)
            return std::nullopt;
        auto out = node.tracker.lifted();
        for (auto e : *local)
            out.push_back(detail::lift_edge(root, map, e.u, e.v));
        return out;
    }

    auto run(const Node & node) -> std::optional<std::vector<Edge>>
    {
        auto p = first_unmarked_p4(node);
        if (!(node.k > 0 && node.touched.size() < 2 * node.k && p))
            return leaf(node);

        ++tree_nodes;
        if (stats)
            ++stats->branch_nodes;
        auto [v1, v2, v3, v4] = *p;
        // Contracting v1 (or v4) into any clique neighbour gives isomorphic
        // graphs, so one representative edge each suffices.
        if (auto s = run(with_contraction(node, Edge(v1, v2))))
            return s;
        if (auto s = run(with_contraction(node, Edge(v3, v4))))
            return s;
        if (auto s = run(with_contraction(node, Edge(v2, v3))))
            return s;
        // v2 gains v4 (or v3 gains v1) through a later merge with another clique vertex
        if (auto s = run(with_touched(node, v2)))
            return s;
        return run(with_touched(node, v3));
    }
};

} // namespace

auto threshold_contraction_split(const Graph & g, std::size_t k, SolverStats * stats)
    -> std::optional<ContractionSolution>
{
    auto part = split_partition_max_clique(g);
    std::sort(part.clique.begin(), part.clique.end());
    ThresholdSearch search{g, part.clique, stats};
    auto found = search.run(Node{detail::ContractionTracker(g), k, {}});
    if (stats)
        stats->max_tree_nodes = std::max(stats->max_tree_nodes, search.tree_nodes);
    if (!found)
        return std::nullopt;
    auto s = make_solution(g, std::move(*found));
    if (s.edges.size() > k || !is_threshold_graph(s.result))
        throw InternalInvariantViolation("threshold contraction produced an invalid certificate");
    return s;
}

auto solve_contraction(const Graph & g, std::size_t k, GraphClass target, SolverStats * stats, std::uint64_t cap)
    -> std::optional<ContractionSolution>
{
    switch (target) {
    case GraphClass::Clique:
        return clique_contraction(g, k, stats);
    case GraphClass::Split:
        return split_contraction(g, k, stats, cap);
    case GraphClass::Threshold:
        return threshold_contraction_split(g, k, stats);
    }
    throw InternalInvariantViolation("unknown graph class");
}

} // namespace contractk
