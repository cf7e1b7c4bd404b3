#include "contractk/oracles.hpp"

#include "contractk/errors.hpp"
#include "internal.hpp"

#include <string>
#include <unordered_map>

namespace contractk {

namespace {

using Indices = std::vector<std::size_t>;

auto deg_sum(const Graph & g, const Indices & at) -> std::size_t
{
    std::size_t s = 0;
    for (auto i : at)
        s += g.degree_at(i);
    return s;
}

void consider(const Graph & g, Indices at, std::optional<Indices> & best, std::size_t & best_score)
{
    auto score = deg_sum(g, at);
    std::sort(at.begin(), at.end());
    if (!best || score < best_score || (score == best_score && at < *best)) {
        best = std::move(at);
        best_score = score;
    }
}

auto find_obstruction(const Graph & g, GraphClass target) -> Indices
{
    auto n = g.order();
    std::optional<Indices> best;
    std::size_t best_score = 0;

    if (target == GraphClass::Clique) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (!g.adjacent_at(a, b))
                    consider(g, {a, b}, best, best_score);
        return *best;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (g.adjacent_at(a, b))
                edges.emplace_back(a, b);

    for (std::size_t x = 0; x < edges.size(); ++x)
        for (std::size_t y = x + 1; y < edges.size(); ++y) {
            auto [a, b] = edges[x];
            auto [c, d] = edges[y];
            if (a == c || a == d || b == c || b == d)
                continue;
            bool ac = g.adjacent_at(a, c), ad = g.adjacent_at(a, d);
            bool bc = g.adjacent_at(b, c), bd = g.adjacent_at(b, d);
            int cross = ac + ad + bc + bd;
            if (cross == 0 || (cross == 2 && ((ac && bd) || (ad && bc))))
                consider(g, {a, b, c, d}, best, best_score);
        }

    if (target == GraphClass::Threshold) {
        for (auto [b, c] : edges)
            for (std::size_t a = 0; a < n; ++a) {
                if (!g.adjacent_at(a, b) || a == c || g.adjacent_at(a, c))
                    continue;
                for (std::size_t d = 0; d < n; ++d)
                    if (d != b && d != a && g.adjacent_at(d, c) && !g.adjacent_at(d, b) && !g.adjacent_at(a, d))
                        consider(g, {a, b, c, d}, best, best_score);
            }
    }
    else if (!best) {
        // split-free of 2K2 and C4 but not split: an induced C5 remains
        const Pattern c5[] = {Pattern::C5};
        auto occ = find_forbidden(g, c5);
        if (occ) {
            Indices at;
            for (auto v : occ->vertices)
                at.push_back(g.index_of(v));
            best = std::move(at);
        }
    }
    if (!best)
        throw InternalInvariantViolation("no obstruction in a graph outside the target class");
    return *best;
}

auto branch_edges(const Graph & g, const Indices & obstruction) -> std::vector<Edge>
{
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (auto o : obstruction)
        for (auto r : g.neighbor_indices(o))
            candidates.emplace_back(std::min(o, r), std::max(o, r));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return detail::dedup_by_twins(g, candidates);
}

struct Search {
    GraphClass target;
    ExactStats * stats;
    std::unordered_map<std::string, std::size_t> visited;

    auto run(const detail::ContractionTracker & node, std::size_t budget) -> std::optional<std::vector<Edge>>
    {
        if (stats)
            ++stats->nodes;
        const auto & g = node.current();
        if (in_class(g, target))
            return node.lifted();
        if (budget == 0)
            return std::nullopt;
        if (target == GraphClass::Clique && !is_connected(g))
            return std::nullopt;
        auto key = detail::partition_key(node.map());
        auto [it, fresh] = visited.emplace(std::move(key), budget);
        if (!fresh) {
            if (it->second >= budget)
                return std::nullopt;
            it->second = budget;
        }
        for (auto e : branch_edges(g, find_obstruction(g, target))) {
            auto child = node;
            child.contract(e);
            if (auto found = run(child, budget - 1))
                return found;
        }
        return std::nullopt;
    }
};

} // namespace

auto exact_contraction(const Graph & g, std::size_t k, GraphClass target, ExactStats * stats)
    -> std::optional<ContractionSolution>
{
    std::size_t limit = std::min(k, g.order() == 0 ? std::size_t{0} : g.order() - 1);
    detail::ContractionTracker root(g);
    for (std::size_t depth = 0; depth <= limit; ++depth) {
        Search s{target, stats, {}};
        if (auto found = s.run(root, depth))
            return make_solution(g, std::move(*found));
    }
    return std::nullopt;
}

} // namespace contractk
