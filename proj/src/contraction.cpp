#include "contractk/errors.hpp"
#include "contractk/graph.hpp"
#include "internal.hpp"

#include <string>

namespace contractk {

namespace detail {

auto UnionFind::labels(std::size_t & count) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> label(parent_.size());
    std::vector<std::uint32_t> root_label(parent_.size(), UINT32_MAX);
    count = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i) {
        auto r = find(i);
        if (root_label[r] == UINT32_MAX)
            root_label[r] = static_cast<std::uint32_t>(count++);
        label[i] = root_label[r];
    }
    return label;
}

namespace {

struct BlockLayout {
    std::vector<VertexId> ids;          // sorted output ids
    std::vector<std::size_t> position;  // block -> output index
    std::vector<VertexId> block_id;     // block -> output id
    VertexId next_id = 0;
};

auto layout_blocks(const Graph & g, std::span<const std::uint32_t> labels, std::size_t blocks) -> BlockLayout
{
    std::vector<std::size_t> size(blocks, 0);
    std::vector<std::size_t> first(blocks, 0);
    for (std::size_t i = labels.size(); i-- > 0;) {
        ++size[labels[i]];
        first[labels[i]] = i;
    }

    BlockLayout out;
    out.position.resize(blocks);
    out.block_id.resize(blocks);
    auto fresh = g.next_id();
    std::size_t singles = 0;
    for (std::size_t b = 0; b < blocks; ++b)
        if (size[b] == 1)
            ++singles;
    std::size_t next_single = 0, next_multi = singles;
    for (std::size_t b = 0; b < blocks; ++b) {
        if (size[b] == 1) {
            out.block_id[b] = g.vertex(first[b]);
            out.position[b] = next_single++;
        }
        else {
            out.block_id[b] = fresh++;
            out.position[b] = next_multi++;
        }
    }
    out.ids.resize(blocks);
    for (std::size_t b = 0; b < blocks; ++b)
        out.ids[out.position[b]] = out.block_id[b];
    out.next_id = fresh;
    return out;
}

auto build_quotient(const Graph & g, std::span<const std::uint32_t> labels, std::size_t blocks,
                    const BlockLayout & layout) -> Graph
{
    auto words = g.words();
    std::vector<Graph::Word> members(blocks * words, 0), reach(blocks * words, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto b = labels[i];
        members[b * words + i / 64] |= Graph::Word{1} << (i % 64);
        auto r = g.row(i);
        for (std::size_t w = 0; w < words; ++w)
            reach[b * words + w] |= r[w];
    }

    GraphBuilder builder(layout.ids, layout.next_id);
    for (std::size_t a = 0; a < blocks; ++a)
        for (std::size_t b = a + 1; b < blocks; ++b) {
            bool hit = false;
            for (std::size_t w = 0; w < words && !hit; ++w)
                hit = (reach[a * words + w] & members[b * words + w]) != 0;
            if (hit)
                builder.connect(layout.position[a], layout.position[b]);
        }
    return std::move(builder).build();
}

} // namespace

auto contract_labels(const Graph & g, std::span<const std::uint32_t> labels, std::size_t blocks) -> Contraction
{
    auto layout = layout_blocks(g, labels, blocks);
    Contraction out{build_quotient(g, labels, blocks, layout), {}};
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.map.set(g.vertex(i), layout.block_id[labels[i]]);
    return out;
}

auto contract_labels_graph(const Graph & g, std::span<const std::uint32_t> labels, std::size_t blocks) -> Graph
{
    return build_quotient(g, labels, blocks, layout_blocks(g, labels, blocks));
}

auto lift_edge(const Graph & original, const VertexMap & map, VertexId a, VertexId b) -> Edge
{
    std::vector<std::size_t> side_a, side_b;
    for (auto & [from, to] : map.entries()) {
        if (to == a)
            side_a.push_back(original.index_of(from));
        else if (to == b)
            side_b.push_back(original.index_of(from));
    }
    std::optional<Edge> best;
    for (auto i : side_a)
        for (auto j : side_b)
            if (original.adjacent_at(i, j)) {
                Edge e(original.vertex(i), original.vertex(j));
                if (!best || e < *best)
                    best = e;
            }
    if (!best)
        throw EdgeNotPresent("no original edge between witness sets of " + std::to_string(a) + " and " +
                             std::to_string(b));
    return *best;
}

ContractionTracker::ContractionTracker(const Graph & original)
    : original_(&original), current_(original), map_(VertexMap::identity(original))
{
}

void ContractionTracker::contract(Edge current_edge)
{
    auto lifted = lift_edge(*original_, map_, current_edge.u, current_edge.v);
    auto step = contract_edge(current_, current_edge);
    current_ = std::move(step.graph);
    map_ = map_.then(step.map);
    lifted_.push_back(lifted);
}

void ContractionTracker::contract_original(Edge original_edge)
{
    if (!original_->has_edge(original_edge))
        throw EdgeNotPresent("edge " + std::to_string(original_edge.u) + "-" + std::to_string(original_edge.v) +
                             " is not in the graph");
    auto a = map_(original_edge.u), b = map_(original_edge.v);
    if (a == b)
        return;
    auto step = contract_edge(current_, Edge(a, b));
    current_ = std::move(step.graph);
    map_ = map_.then(step.map);
    lifted_.push_back(original_edge);
}

} // namespace detail

namespace {

auto missing_edge(Edge e) -> EdgeNotPresent
{
    return EdgeNotPresent("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
}

} // namespace

auto contract_edge(const Graph & g, Edge e) -> Contraction
{
    if (!g.has_edge(e))
        throw missing_edge(e);
    auto iu = g.index_of(e.u), iv = g.index_of(e.v);
    std::vector<std::uint32_t> labels(g.order());
    std::uint32_t next = 0;
    std::uint32_t merged = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (i == iv)
            labels[i] = merged;
        else if (i == iu)
            labels[i] = merged = next++;
        else
            labels[i] = next++;
    }
    return detail::contract_labels(g, labels, next);
}

auto contract_edges(const Graph & g, std::span<const Edge> f) -> Contraction
{
    for (auto e : f)
        if (!g.has_edge(e))
            throw missing_edge(e);
    Contraction acc{g, VertexMap::identity(g)};
    for (auto e : f) {
        auto a = acc.map(e.u), b = acc.map(e.v);
        if (a == b)
            continue;
        auto step = contract_edge(acc.graph, Edge(a, b));
        acc.map = acc.map.then(step.map);
        acc.graph = std::move(step.graph);
    }
    return acc;
}

auto witness_from_edges(const Graph & g, std::span<const Edge> f) -> WitnessStructure
{
    detail::UnionFind uf(g.order());
    for (auto e : f) {
        if (!g.has_edge(e))
            throw missing_edge(e);
        uf.unite(static_cast<std::uint32_t>(g.index_of(e.u)), static_cast<std::uint32_t>(g.index_of(e.v)));
    }
    std::size_t count = 0;
    auto labels = uf.labels(count);
    WitnessStructure w;
    w.blocks.resize(count);
    for (std::size_t i = 0; i < g.order(); ++i)
        w.blocks[labels[i]].push_back(g.vertex(i));
    return w;
}

namespace {

auto labels_of(const Graph & g, const WitnessStructure & w, std::size_t & count) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> raw(g.order(), UINT32_MAX);
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
        if (w.blocks[b].empty())
            throw InvalidWitness("witness structure has an empty block");
        for (auto v : w.blocks[b]) {
            auto i = g.find(v);
            if (!i)
                throw InvalidWitness("witness block names unknown vertex " + std::to_string(v));
            if (raw[*i] != UINT32_MAX)
                throw InvalidWitness("vertex " + std::to_string(v) + " appears in two witness blocks");
            raw[*i] = static_cast<std::uint32_t>(b);
        }
    }
    for (std::size_t i = 0; i < g.order(); ++i)
        if (raw[i] == UINT32_MAX)
            throw InvalidWitness("vertex " + std::to_string(g.vertex(i)) + " is not covered by the witness structure");

    for (auto & block : w.blocks) {
        if (block.size() == 1)
            continue;
        std::vector<std::size_t> stack{g.index_of(block.front())};
        std::vector<bool> seen(g.order(), false);
        seen[stack.front()] = true;
        std::size_t reached = 1;
        auto b = raw[stack.front()];
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (auto j : g.neighbor_indices(i))
                if (!seen[j] && raw[j] == b) {
                    seen[j] = true;
                    ++reached;
                    stack.push_back(j);
                }
        }
        if (reached != block.size())
            throw DisconnectedBlock("witness block starting at vertex " + std::to_string(block.front()) +
                                    " does not induce a connected subgraph");
    }

    // renumber blocks by smallest member
    std::vector<std::uint32_t> renum(w.blocks.size(), UINT32_MAX);
    std::vector<std::uint32_t> labels(g.order());
    count = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (renum[raw[i]] == UINT32_MAX)
            renum[raw[i]] = static_cast<std::uint32_t>(count++);
        labels[i] = renum[raw[i]];
    }
    return labels;
}

} // namespace

auto quotient_with_map(const Graph & g, const WitnessStructure & w) -> Contraction
{
    std::size_t count = 0;
    auto labels = labels_of(g, w, count);
    return detail::contract_labels(g, labels, count);
}

auto quotient(const Graph & g, const WitnessStructure & w) -> Graph { return quotient_with_map(g, w).graph; }

auto is_connected(const Graph & g) -> bool
{
    if (g.order() <= 1)
        return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        for (auto j : g.neighbor_indices(i))
            if (!seen[j]) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == g.order();
}

} // namespace contractk
