#include "contractk/recognition.hpp"

#include "contractk/errors.hpp"

#include <numeric>

namespace contractk {

auto class_name(GraphClass c) -> const char *
{
    switch (c) {
    case GraphClass::Split: return "split";
    case GraphClass::Threshold: return "threshold";
    case GraphClass::Clique: return "clique";
    }
    return "?";
}

namespace {

/// Vertices by non-increasing degree plus the clique prefix length, when the
/// degree sequence certifies a split graph.
auto degree_split_prefix(const Graph & g, std::vector<std::size_t> & order) -> std::optional<std::size_t>
{
    auto n = g.order();
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = g.degree_at(i);
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });

    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (deg[order[i]] >= i)
            m = i + 1;
    std::size_t head = 0, tail = 0;
    for (std::size_t i = 0; i < n; ++i)
        (i < m ? head : tail) += deg[order[i]];
    if (head != m * (m == 0 ? 0 : m - 1) + tail)
        return std::nullopt;
    return m;
}

auto closed_subset(const Graph & g, std::size_t a, std::size_t b) -> bool
{
    // N[a] ⊆ N[b]
    auto ra = g.row(a), rb = g.row(b);
    for (std::size_t w = 0; w < ra.size(); ++w) {
        auto na = ra[w], nb = rb[w];
        if (a / 64 == w)
            na |= Graph::Word{1} << (a % 64);
        if (b / 64 == w)
            nb |= Graph::Word{1} << (b % 64);
        if (na & ~nb)
            return false;
    }
    return true;
}

auto open_subset(const Graph & g, std::size_t a, std::size_t b) -> bool
{
    // N(a) ⊆ N(b)
    auto ra = g.row(a), rb = g.row(b);
    for (std::size_t w = 0; w < ra.size(); ++w)
        if (ra[w] & ~rb[w])
            return false;
    return true;
}

} // namespace

auto is_split_graph(const Graph & g) -> bool
{
    std::vector<std::size_t> order;
    return degree_split_prefix(g, order).has_value();
}

auto split_partition_max_clique(const Graph & g) -> SplitPartition
{
    std::vector<std::size_t> order;
    auto m = degree_split_prefix(g, order);
    if (!m)
        throw NotSplit("graph is not split");

    std::vector<bool> in_clique(g.order(), false);
    for (std::size_t i = 0; i < *m; ++i)
        in_clique[order[i]] = true;

    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t v = 0; v < g.order() && !moved; ++v) {
            if (in_clique[v])
                continue;
            bool universal = true;
            for (std::size_t u = 0; u < g.order() && universal; ++u)
                if (in_clique[u] && !g.adjacent_at(u, v))
                    universal = false;
            if (universal) {
                in_clique[v] = true;
                moved = true;
            }
        }
    }

    SplitPartition p;
    for (std::size_t i = 0; i < g.order(); ++i)
        (in_clique[i] ? p.clique : p.independent).push_back(g.vertex(i));
    return p;
}

auto is_split(const Graph & g) -> SplitCheck
{
    SplitCheck out;
    if (is_split_graph(g)) {
        out.split = true;
        out.partition = split_partition_max_clique(g);
    }
    else {
        out.witness = find_forbidden(g, kSplitObstructions);
    }
    return out;
}

auto is_threshold_graph(const Graph & g) -> bool
{
    // Threshold graphs are exactly those whose vicinal preorder is total.
    auto n = g.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            bool ab = g.adjacent_at(a, b);
            bool fits = ab ? (closed_subset(g, a, b) || closed_subset(g, b, a))
                           : (open_subset(g, a, b) || open_subset(g, b, a));
            if (!fits)
                return false;
        }
    return true;
}

auto is_threshold(const Graph & g) -> ThresholdCheck
{
    ThresholdCheck out;
    if (!is_threshold_graph(g)) {
        out.witness = find_forbidden(g, kThresholdObstructions);
        return out;
    }
    out.threshold = true;
    auto p = split_partition_max_clique(g);
    ThresholdOrdering o{p.clique, p.independent};
    std::stable_sort(o.clique_order.begin(), o.clique_order.end(),
                     [&](auto a, auto b) { return g.degree(a) < g.degree(b); });
    std::stable_sort(o.independent_order.begin(), o.independent_order.end(),
                     [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
    out.ordering = std::move(o);
    return out;
}

auto is_clique(const Graph & g) -> bool
{
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.degree_at(i) + 1 != g.order())
            return false;
    return true;
}

auto in_class(const Graph & g, GraphClass c) -> bool
{
    switch (c) {
    case GraphClass::Split: return is_split_graph(g);
    case GraphClass::Threshold: return is_threshold_graph(g);
    case GraphClass::Clique: return is_clique(g);
    }
    return false;
}

namespace {

auto covers_exactly(const Graph & g, const std::vector<VertexId> & a, const std::vector<VertexId> & b) -> bool
{
    std::vector<bool> seen(g.order(), false);
    for (auto * side : {&a, &b})
        for (auto v : *side) {
            auto i = g.find(v);
            if (!i || seen[*i])
                return false;
            seen[*i] = true;
        }
    return a.size() + b.size() == g.order();
}

auto is_clique_set(const Graph & g, const std::vector<VertexId> & s) -> bool
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

auto is_independent_set(const Graph & g, const std::vector<VertexId> & s) -> bool
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

} // namespace

auto valid_split_partition(const Graph & g, const SplitPartition & p) -> bool
{
    if (!covers_exactly(g, p.clique, p.independent) || !is_clique_set(g, p.clique) ||
        !is_independent_set(g, p.independent))
        return false;
    for (auto v : p.independent) {
        bool universal = true;
        for (auto u : p.clique)
            universal = universal && g.adjacent(u, v);
        if (universal)
            return false;
    }
    return true;
}

auto valid_threshold_ordering(const Graph & g, const ThresholdOrdering & o) -> bool
{
    if (!covers_exactly(g, o.clique_order, o.independent_order) || !is_clique_set(g, o.clique_order) ||
        !is_independent_set(g, o.independent_order))
        return false;
    for (std::size_t i = 0; i + 1 < o.clique_order.size(); ++i)
        if (!closed_subset(g, g.index_of(o.clique_order[i]), g.index_of(o.clique_order[i + 1])))
            return false;
    for (std::size_t i = 0; i + 1 < o.independent_order.size(); ++i)
        if (!open_subset(g, g.index_of(o.independent_order[i + 1]), g.index_of(o.independent_order[i])))
            return false;
    return true;
}

} // namespace contractk
