#include "contractk/reductions.hpp"

#include "contractk/errors.hpp"

#include <deque>
#include <string>

namespace contractk {

namespace {

auto role(const std::string & kind, std::size_t i) -> std::string
{
    return kind + ":" + std::to_string(i);
}

auto role(const std::string & kind, std::size_t i, std::size_t j) -> std::string
{
    return kind + ":" + std::to_string(i) + ":" + std::to_string(j);
}

auto id(std::size_t i) -> VertexId
{
    return static_cast<VertexId>(i);
}

// Red-blue gadget layout helpers.
struct RbdsLayout {
    std::size_t xs, ys, t;

    auto x(std::size_t i) const -> std::size_t { return i; }
    auto y(std::size_t j) const -> std::size_t { return xs + j; }
    auto clique_size() const -> std::size_t { return xs + t + 3; }
    auto u() const -> std::size_t { return xs + ys; }
    auto leaves_per_x() const -> std::size_t { return xs + t + 1; }
    auto leaf(std::size_t i, std::size_t l) const -> std::size_t
    {
        return xs + ys + clique_size() + i * leaves_per_x() + l;
    }
    auto order() const -> std::size_t { return xs + ys + clique_size() + xs * leaves_per_x(); }
};

// Threshold gadget layout helpers.
struct DomaticLayout {
    std::size_t xs, ys;

    auto k(std::size_t i) const -> std::size_t { return i; }
    auto a(std::size_t i) const -> std::size_t { return xs + i; }
    auto b(std::size_t i) const -> std::size_t { return 3 * xs + 1 + i; }
    auto v(std::size_t copy, std::size_t j) const -> std::size_t { return 4 * xs + 2 + copy * ys + j; }
    auto order() const -> std::size_t { return 4 * xs + 2 + (xs + 1) * ys; }
};

void check_valid(const BipartiteInstance & inst)
{
    try {
        inst.validate();
    } catch (const Error & e) {
        throw PreconditionViolated(e.what());
    }
}

void require_t_in_range(const BipartiteInstance & inst)
{
    if (inst.t < 1 || inst.t > inst.x_count)
        throw PreconditionViolated("t must satisfy 1 <= t <= |X|");
}

} // namespace

auto bipartite_graph(const BipartiteInstance & inst) -> Graph
{
    Graph g(inst.x_count + inst.y_count);
    for (auto [x, y] : inst.edges)
        g.add_edge(id(x), id(inst.x_count + y));
    return g;
}

auto gen_split_from_clique(const Graph & g, std::size_t k) -> GraphArtifact
{
    auto n = g.order();
    GraphArtifact out;
    out.graph = Graph(n + k + 2);
    for (auto e : g.edges())
        out.graph.add_edge(id(g.index_of(e.u)), id(g.index_of(e.v)));
    for (std::size_t a = 0; a < k + 2; ++a)
        for (std::size_t v = 0; v < n; ++v)
            out.graph.add_edge(id(n + a), id(v));
    out.budget = k;
    for (std::size_t v = 0; v < n; ++v)
        out.roles.push_back(role("source", g.vertex(v)));
    for (std::size_t a = 0; a < k + 2; ++a)
        out.roles.push_back(role("apex", a));
    return out;
}

auto lift_clique_to_split(const Graph & g, std::size_t k, const GraphArtifact & target,
                          const ContractionSolution & source) -> ContractionSolution
{
    try {
        if (!verify_certificate(g, source.edges, GraphClass::Clique, k))
            throw InvalidSourceCertificate("not a clique contraction certificate within budget");
    } catch (const EdgeNotPresent & e) {
        throw InvalidSourceCertificate(e.what());
    }
    std::vector<Edge> edges;
    for (auto e : source.edges)
        edges.emplace_back(id(g.index_of(e.u)), id(g.index_of(e.v)));
    return make_solution(target.graph, std::move(edges));
}

auto gen_split_from_rbds(const BipartiteInstance & inst) -> GraphArtifact
{
    check_valid(inst);
    if (inst.t > inst.x_count)
        throw PreconditionViolated("t must not exceed |X|");
    std::vector<bool> covered(inst.x_count, false);
    for (auto [x, y] : inst.edges)
        covered[x] = true;
    for (std::size_t x = 0; x < inst.x_count; ++x)
        if (!covered[x])
            throw PreconditionViolated("vertex x:" + std::to_string(x) + " has no neighbour in Y");

    RbdsLayout lay{inst.x_count, inst.y_count, inst.t};
    GraphArtifact out;
    out.graph = Graph(lay.order());
    out.budget = inst.x_count + inst.t;
    for (auto [x, y] : inst.edges)
        out.graph.add_edge(id(lay.x(x)), id(lay.y(y)));
    for (std::size_t a = 0; a < lay.clique_size(); ++a)
        for (std::size_t b = a + 1; b < lay.clique_size(); ++b)
            out.graph.add_edge(id(lay.u() + a), id(lay.u() + b));
    for (std::size_t y = 0; y < inst.y_count; ++y)
        out.graph.add_edge(id(lay.u()), id(lay.y(y)));
    for (std::size_t x = 0; x < inst.x_count; ++x)
        for (std::size_t l = 0; l < lay.leaves_per_x(); ++l)
            out.graph.add_edge(id(lay.x(x)), id(lay.leaf(x, l)));

    for (std::size_t x = 0; x < inst.x_count; ++x)
        out.roles.push_back(role("x", x));
    for (std::size_t y = 0; y < inst.y_count; ++y)
        out.roles.push_back(role("y", y));
    out.roles.emplace_back("u");
    for (std::size_t c = 1; c < lay.clique_size(); ++c)
        out.roles.push_back(role("clique", c));
    for (std::size_t x = 0; x < inst.x_count; ++x)
        for (std::size_t l = 0; l < lay.leaves_per_x(); ++l)
            out.roles.push_back(role("leaf", x, l));
    return out;
}

auto lift_rbds_to_split(const BipartiteInstance & inst, const GraphArtifact & target,
                        const std::vector<std::size_t> & dominators) -> ContractionSolution
{
    for (auto y : dominators)
        if (y >= inst.y_count)
            throw InvalidSourceCertificate("dominator index out of range");
    if (dominators.size() > inst.t || !dominates_x(inst, dominators))
        throw InvalidSourceCertificate("not a red-blue dominating set within budget");

    RbdsLayout lay{inst.x_count, inst.y_count, inst.t};
    const auto & g = target.graph;
    std::vector<bool> member(g.order(), false), seen(g.order(), false);
    member[lay.u()] = true;
    for (auto y : dominators)
        member[lay.y(y)] = true;
    for (std::size_t x = 0; x < inst.x_count; ++x)
        member[lay.x(x)] = true;

    // BFS tree of the subgraph induced by {u} ∪ Y' ∪ X, rooted at u.
    std::vector<Edge> edges;
    std::deque<std::size_t> queue{lay.u()};
    seen[lay.u()] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbor_indices(v))
            if (member[w] && !seen[w]) {
                seen[w] = true;
                edges.emplace_back(id(v), id(w));
                queue.push_back(w);
            }
    }
    return make_solution(g, std::move(edges));
}

auto rbds_from_split(const BipartiteInstance & inst, const GraphArtifact & target, std::span<const Edge> certificate)
    -> std::vector<std::size_t>
{
    try {
        if (!verify_certificate(target.graph, certificate, GraphClass::Split, target.budget))
            throw InvalidSourceCertificate("not a split contraction certificate within budget");
    } catch (const EdgeNotPresent & e) {
        throw InvalidSourceCertificate(e.what());
    }
    RbdsLayout lay{inst.x_count, inst.y_count, inst.t};
    auto ws = witness_from_edges(target.graph, certificate);
    std::vector<std::size_t> out;
    for (const auto & block : ws.blocks) {
        if (std::find(block.begin(), block.end(), id(lay.u())) == block.end())
            continue;
        for (auto v : block)
            if (v >= lay.y(0) && v < lay.y(0) + inst.y_count)
                out.push_back(v - lay.y(0));
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto gen_osdomatic_from_osds(const BipartiteInstance & inst) -> BipartiteArtifact
{
    check_valid(inst);
    require_t_in_range(inst);
    auto xs = inst.x_count, ys = inst.y_count, zs = inst.x_count - inst.t;
    BipartiteArtifact out;
    auto & o = out.instance;
    o.x_count = xs + zs;
    o.y_count = ys + 1;
    o.t = xs - inst.t + 1;
    o.edges = inst.edges;
    for (std::size_t x = 0; x < xs; ++x)
        o.edges.emplace_back(x, ys);
    for (std::size_t z = 0; z < zs; ++z)
        for (std::size_t y = 0; y < ys; ++y)
            o.edges.emplace_back(xs + z, y);
    std::sort(o.edges.begin(), o.edges.end());

    for (std::size_t x = 0; x < xs; ++x)
        out.roles.push_back(role("x", x));
    for (std::size_t z = 0; z < zs; ++z)
        out.roles.push_back(role("z", z));
    for (std::size_t y = 0; y < ys; ++y)
        out.roles.push_back(role("y", y));
    out.roles.emplace_back("w");
    return out;
}

auto lift_osds_to_osdomatic(const BipartiteInstance & inst, const std::vector<std::size_t> & dominators)
    -> XPartition
{
    require_t_in_range(inst);
    for (auto x : dominators)
        if (x >= inst.x_count)
            throw InvalidSourceCertificate("dominator index out of range");
    if (dominators.size() > inst.t || !dominates_y(inst, dominators))
        throw InvalidSourceCertificate("not a one-sided dominating set within budget");

    std::vector<bool> in_s(inst.x_count, false);
    for (auto x : dominators)
        in_s[x] = true;
    std::vector<std::size_t> rest;
    for (std::size_t x = 0; x < inst.x_count; ++x)
        if (!in_s[x])
            rest.push_back(x);

    // |rest| >= |Z|; the surplus joins the block of S.
    auto zs = inst.x_count - inst.t;
    XPartition out(1);
    out[0].assign(dominators.begin(), dominators.end());
    out[0].insert(out[0].end(), rest.begin() + static_cast<std::ptrdiff_t>(zs), rest.end());
    std::sort(out[0].begin(), out[0].end());
    for (std::size_t i = 0; i < zs; ++i)
        out.push_back({rest[i], inst.x_count + i});
    return out;
}

auto osds_from_osdomatic(const BipartiteInstance & inst, const XPartition & partition) -> std::vector<std::size_t>
{
    auto target = gen_osdomatic_from_osds(inst).instance;
    if (!valid_osdomatic_partition(target, partition))
        throw InvalidSourceCertificate("not a domatic partition of the generated instance");
    // At most |X|-t blocks hold a z, so some block is z-free, and the other
    // blocks each need an x to dominate w.
    const std::vector<std::size_t> * best = nullptr;
    for (const auto & block : partition) {
        if (std::any_of(block.begin(), block.end(), [&](std::size_t x) { return x >= inst.x_count; }))
            continue;
        if (!best || block.size() < best->size())
            best = &block;
    }
    if (!best)
        throw InternalInvariantViolation("every block of the domatic partition contains a z vertex");
    std::vector<std::size_t> out;
    for (auto x : *best)
        if (x < inst.x_count)
            out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

auto valid_osdomatic_partition(const BipartiteInstance & inst, const XPartition & partition) -> bool
{
    if (partition.size() != inst.t)
        return false;
    std::vector<int> hits(inst.x_count, 0);
    for (const auto & block : partition)
        for (auto x : block) {
            if (x >= inst.x_count)
                return false;
            ++hits[x];
        }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        return false;
    return std::all_of(partition.begin(), partition.end(),
                       [&](const std::vector<std::size_t> & block) { return dominates_y(inst, block); });
}

auto gen_threshold_from_osdomatic(const BipartiteInstance & inst) -> GraphArtifact
{
    check_valid(inst);
    require_t_in_range(inst);
    auto xs = inst.x_count, ys = inst.y_count;
    DomaticLayout lay{xs, ys};
    GraphArtifact out;
    out.graph = Graph(lay.order());
    out.budget = xs - inst.t;

    auto clique_end = 3 * xs + 1; // K ∪ A occupies 0..3|X|
    for (std::size_t a = 0; a < clique_end; ++a)
        for (std::size_t b = a + 1; b < clique_end; ++b)
            out.graph.add_edge(id(a), id(b));
    for (std::size_t i = 0; i <= xs; ++i)
        for (std::size_t x = 0; x < xs; ++x)
            out.graph.add_edge(id(lay.b(i)), id(lay.k(x)));
    for (std::size_t copy = 0; copy <= xs; ++copy)
        for (std::size_t j = 0; j < ys; ++j) {
            for (std::size_t a = 0; a < 2 * xs + 1; ++a)
                out.graph.add_edge(id(lay.v(copy, j)), id(lay.a(a)));
            for (auto [x, y] : inst.edges)
                if (y == j)
                    out.graph.add_edge(id(lay.v(copy, j)), id(lay.k(x)));
        }

    for (std::size_t x = 0; x < xs; ++x)
        out.roles.push_back(role("k", x));
    for (std::size_t a = 0; a < 2 * xs + 1; ++a)
        out.roles.push_back(role("a", a));
    for (std::size_t b = 0; b <= xs; ++b)
        out.roles.push_back(role("b", b));
    for (std::size_t copy = 0; copy <= xs; ++copy)
        for (std::size_t j = 0; j < ys; ++j)
            out.roles.push_back(role("i", copy, j));
    return out;
}

auto lift_osdomatic_to_threshold(const BipartiteInstance & inst, const GraphArtifact & target,
                                 const XPartition & partition) -> ContractionSolution
{
    require_t_in_range(inst);
    if (!valid_osdomatic_partition(inst, partition))
        throw InvalidSourceCertificate("not a domatic partition into t blocks");
    // Without Y the gadget is already threshold; empty blocks would otherwise
    // leave the star edges above budget.
    if (inst.y_count == 0)
        return make_solution(target.graph, {});
    DomaticLayout lay{inst.x_count, inst.y_count};
    std::vector<Edge> edges;
    for (const auto & block : partition) {
        if (block.empty())
            continue;
        auto centre = *std::min_element(block.begin(), block.end());
        for (auto x : block)
            if (x != centre)
                edges.emplace_back(id(lay.k(centre)), id(lay.k(x)));
    }
    return make_solution(target.graph, std::move(edges));
}

} // namespace contractk
