#pragma once

#include "contractk/graph.hpp"
#include "contractk/recognition.hpp"

#include <span>
#include <vector>

namespace contractk {

/// A set of edges of the input graph together with the graph they contract to.
struct ContractionSolution {
    std::vector<Edge> edges;
    Graph result;
    VertexMap map;
};

/// Contracts `edges` in g and packages the certificate; edges are sorted.
auto make_solution(const Graph & g, std::vector<Edge> edges) -> ContractionSolution;

/// True iff |f| <= k and g/f lies in the target class. Throws EdgeNotPresent.
auto verify_certificate(const Graph & g, std::span<const Edge> f, GraphClass target, std::size_t k) -> bool;

/// Re-derives result and map from the edges and checks budget and class.
auto verify_solution(const Graph & g, const ContractionSolution & s, GraphClass target, std::size_t k) -> bool;

} // namespace contractk
