#include "contractk/solution.hpp"

namespace contractk {

auto make_solution(const Graph & g, std::vector<Edge> edges) -> ContractionSolution
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto c = contract_edges(g, edges);
    return {std::move(edges), std::move(c.graph), std::move(c.map)};
}

auto verify_certificate(const Graph & g, std::span<const Edge> f, GraphClass target, std::size_t k) -> bool
{
    auto c = contract_edges(g, f);
    std::vector<Edge> distinct(f.begin(), f.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return distinct.size() <= k && in_class(c.graph, target);
}

auto verify_solution(const Graph & g, const ContractionSolution & s, GraphClass target, std::size_t k) -> bool
{
    if (!verify_certificate(g, s.edges, target, k))
        return false;
    auto c = contract_edges(g, s.edges);
    return c.graph == s.result && c.map == s.map;
}

} // namespace contractk
