#include "contractk/fpt.hpp"

#include "contractk/recognition.hpp"
#include "internal.hpp"

#include <unordered_map>

namespace contractk {

namespace {

auto delete_to_split(const Graph & g, std::size_t d, std::vector<VertexId> & chosen) -> bool
{
    if (is_split_graph(g))
        return true;
    if (d == 0)
        return false;
    auto occ = find_forbidden(g, kSplitObstructions);
    auto vs = occ->vertices;
    std::sort(vs.begin(), vs.end());
    for (auto v : vs) {
        chosen.push_back(v);
        const VertexId drop[] = {v};
        if (delete_to_split(g.without(drop), d - 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

struct CliqueSearch {
    SolverStats * stats;
    std::unordered_map<std::string, std::size_t> visited;

    auto run(const detail::ContractionTracker & node, std::size_t budget) -> std::optional<std::vector<Edge>>
    {
        const auto & g = node.current();
        if (is_clique(g)) {
            if (stats)
                ++stats->leaves;
            return node.lifted();
        }
        if (budget == 0 || !is_connected(g)) {
            if (stats)
                ++stats->leaves;
            return std::nullopt;
        }
        auto [it, fresh] = visited.emplace(detail::partition_key(node.map()), budget);
        if (!fresh) {
            if (it->second >= budget)
                return std::nullopt;
            it->second = budget;
        }
        if (stats)
            ++stats->branch_nodes;

        auto n = g.order();
        std::size_t x = 0, y = 0, best = SIZE_MAX;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (!g.adjacent_at(a, b) && g.degree_at(a) + g.degree_at(b) < best) {
                    best = g.degree_at(a) + g.degree_at(b);
                    x = a;
                    y = b;
                }

        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (auto end : {x, y})
            for (auto r : g.neighbor_indices(end))
                candidates.emplace_back(std::min(end, r), std::max(end, r));
        for (auto e : detail::dedup_by_twins(g, candidates)) {
            auto child = node;
            child.contract(e);
            if (auto found = run(child, budget - 1))
                return found;
        }
        return std::nullopt;
    }
};

} // namespace

auto split_vertex_deletion(const Graph & g, std::size_t d) -> std::optional<std::vector<VertexId>>
{
    for (std::size_t limit = 0; limit <= std::min(d, g.order()); ++limit) {
        std::vector<VertexId> chosen;
        if (delete_to_split(g, limit, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
    return std::nullopt;
}

auto clique_contraction(const Graph & g, std::size_t k, SolverStats * stats) -> std::optional<ContractionSolution>
{
    if (!is_connected(g)) {
        if (stats)
            ++stats->leaves;
        return std::nullopt;
    }
    std::size_t limit = std::min(k, g.order() == 0 ? std::size_t{0} : g.order() - 1);
    detail::ContractionTracker root(g);
    for (std::size_t depth = 0; depth <= limit; ++depth) {
        CliqueSearch search{stats, {}};
        if (auto found = search.run(root, depth))
            return make_solution(g, std::move(*found));
    }
    return std::nullopt;
}

} // namespace contractk
