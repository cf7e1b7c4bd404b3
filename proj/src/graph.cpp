#include "contractk/graph.hpp"

#include "contractk/errors.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace contractk {

namespace {

auto words_for(std::size_t n) -> std::size_t { return (n + 63) / 64; }

} // namespace

Graph::Graph(std::size_t n)
{
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    reset(std::move(ids), static_cast<VertexId>(n));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
{
    for (auto e : edges)
        add_edge(e.u, e.v);
}

auto Graph::on_vertices(std::vector<VertexId> ids) -> Graph
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Graph g;
    VertexId next = ids.empty() ? 0 : ids.back() + 1;
    g.reset(std::move(ids), next);
    return g;
}

void Graph::reset(std::vector<VertexId> ids, VertexId next_id)
{
    ids_ = std::move(ids);
    words_ = words_for(ids_.size());
    adj_.assign(ids_.size() * words_, 0);
    edge_count_ = 0;
    next_id_ = next_id;
}

auto Graph::find(VertexId v) const -> std::optional<std::size_t>
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

auto Graph::index_of(VertexId v) const -> std::size_t
{
    if (auto i = find(v))
        return *i;
    throw UnknownVertex("vertex " + std::to_string(v) + " is not in the graph");
}

auto Graph::adjacent(VertexId a, VertexId b) const -> bool
{
    auto i = find(a), j = find(b);
    return i && j && adjacent_at(*i, *j);
}

auto Graph::has_edge(Edge e) const -> bool { return e.u != e.v && adjacent(e.u, e.v); }

auto Graph::degree_at(std::size_t i) const -> std::size_t
{
    std::size_t d = 0;
    for (auto w : row(i))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

auto Graph::neighbor_indices(std::size_t i) const -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w)
        for (auto bits = r[w]; bits != 0; bits &= bits - 1)
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    return out;
}

auto Graph::neighbors(VertexId v) const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (auto j : neighbor_indices(index_of(v)))
        out.push_back(ids_[j]);
    return out;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (auto j : neighbor_indices(i))
            if (j > i)
                out.emplace_back(ids_[i], ids_[j]);
    return out;
}

void Graph::add_edge(VertexId a, VertexId b)
{
    if (a == b)
        throw PreconditionViolated("self-loop on vertex " + std::to_string(a));
    add_edge_at(index_of(a), index_of(b));
}

void Graph::add_edge_at(std::size_t i, std::size_t j)
{
    if (i == j)
        throw PreconditionViolated("self-loop on vertex " + std::to_string(ids_[i]));
    if (adjacent_at(i, j))
        return;
    adj_[i * words_ + j / 64] |= Word{1} << (j % 64);
    adj_[j * words_ + i / 64] |= Word{1} << (i % 64);
    ++edge_count_;
}

auto Graph::add_vertex() -> VertexId
{
    auto id = next_id_;
    auto n = ids_.size();
    if (words_for(n + 1) != words_) {
        auto old = *this;
        auto ids = ids_;
        ids.push_back(id);
        reset(std::move(ids), id + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (auto j : old.neighbor_indices(i))
                if (j > i)
                    add_edge_at(i, j);
    }
    else {
        ids_.push_back(id);
        adj_.resize(ids_.size() * words_, 0);
        next_id_ = id + 1;
    }
    return id;
}

auto Graph::induced(std::span<const VertexId> keep) const -> Graph
{
    std::vector<std::size_t> idx;
    idx.reserve(keep.size());
    for (auto v : keep)
        idx.push_back(index_of(v));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    std::vector<VertexId> ids;
    ids.reserve(idx.size());
    for (auto i : idx)
        ids.push_back(ids_[i]);
    GraphBuilder b(std::move(ids), next_id_);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t c = a + 1; c < idx.size(); ++c)
            if (adjacent_at(idx[a], idx[c]))
                b.connect(a, c);
    return std::move(b).build();
}

auto Graph::without(std::span<const VertexId> drop) const -> Graph
{
    std::vector<VertexId> keep;
    for (auto v : ids_)
        if (std::find(drop.begin(), drop.end(), v) == drop.end())
            keep.push_back(v);
    return induced(keep);
}

GraphBuilder::GraphBuilder(std::vector<VertexId> sorted_ids, VertexId next_id)
{
    graph_.reset(std::move(sorted_ids), next_id);
}

void GraphBuilder::connect(std::size_t i, std::size_t j) { graph_.add_edge_at(i, j); }

void GraphBuilder::or_row(std::size_t i, std::span<const Graph::Word> bits)
{
    auto * dst = graph_.adj_.data() + i * graph_.words_;
    for (std::size_t w = 0; w < graph_.words_; ++w)
        dst[w] |= bits[w];
}

auto GraphBuilder::build() && -> Graph
{
    std::size_t twice = 0;
    for (auto w : graph_.adj_)
        twice += static_cast<std::size_t>(std::popcount(w));
    graph_.edge_count_ = twice / 2;
    return std::move(graph_);
}

auto VertexMap::identity(const Graph & g) -> VertexMap
{
    VertexMap m;
    for (auto v : g.vertices())
        m.entries_.emplace_back(v, v);
    return m;
}

auto VertexMap::operator()(VertexId original) const -> VertexId
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), original,
                               [](const auto & e, VertexId v) { return e.first < v; });
    if (it == entries_.end() || it->first != original)
        throw UnknownVertex("vertex " + std::to_string(original) + " is not in the map domain");
    return it->second;
}

auto VertexMap::contains(VertexId original) const -> bool
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), original,
                               [](const auto & e, VertexId v) { return e.first < v; });
    return it != entries_.end() && it->first == original;
}

void VertexMap::set(VertexId original, VertexId image)
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), original,
                               [](const auto & e, VertexId v) { return e.first < v; });
    if (it != entries_.end() && it->first == original)
        it->second = image;
    else
        entries_.insert(it, {original, image});
}

auto VertexMap::domain() const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (auto & [from, to] : entries_)
        out.push_back(from);
    return out;
}

auto VertexMap::image() const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (auto & [from, to] : entries_)
        out.push_back(to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto VertexMap::then(const VertexMap & next) const -> VertexMap
{
    VertexMap m;
    m.entries_.reserve(entries_.size());
    for (auto & [from, to] : entries_)
        m.entries_.emplace_back(from, next(to));
    return m;
}

} // namespace contractk
