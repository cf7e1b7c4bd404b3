#include "contractk/graph.hpp"

#include <array>
#include <map>

namespace contractk {

auto pattern_name(Pattern p) -> const char *
{
    switch (p) {
    case Pattern::TwoK2: return "2K2";
    case Pattern::C4: return "C4";
    case Pattern::C5: return "C5";
    case Pattern::P4: return "P4";
    }
    return "?";
}

auto pattern_order(Pattern p) -> std::size_t { return p == Pattern::C5 ? 5 : 4; }

namespace {

template <std::size_t N>
auto classify_indices(const Graph & g, const std::array<std::size_t, N> & idx) -> std::optional<Pattern>
{
    std::array<int, N> deg{};
    int edges = 0;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b)
            if (g.adjacent_at(idx[a], idx[b])) {
                ++deg[a];
                ++deg[b];
                ++edges;
            }
    auto count = [&](int d) {
        int c = 0;
        for (auto x : deg)
            c += x == d;
        return c;
    };
    if constexpr (N == 4) {
        if (edges == 2 && count(1) == 4)
            return Pattern::TwoK2;
        if (edges == 4 && count(2) == 4)
            return Pattern::C4;
        if (edges == 3 && count(1) == 2 && count(2) == 2)
            return Pattern::P4;
    }
    else if constexpr (N == 5) {
        if (edges == 5 && count(2) == 5)
            return Pattern::C5;
    }
    return std::nullopt;
}

/// Orders the vertices of a recognised occurrence canonically.
template <std::size_t N>
auto arrange(const Graph & g, Pattern p, const std::array<std::size_t, N> & idx) -> std::vector<VertexId>
{
    std::vector<std::size_t> order;
    auto nbrs = [&](std::size_t a) {
        std::vector<std::size_t> out;
        for (auto b : idx)
            if (b != a && g.adjacent_at(a, b))
                out.push_back(b);
        return out;
    };

    if (p == Pattern::TwoK2) {
        auto a = idx[0];
        auto b = nbrs(a).front();
        order = {a, b};
        for (auto c : idx)
            if (c != a && c != b)
                order.push_back(c);
    }
    else {
        std::size_t start = idx[0];
        if (p == Pattern::P4) {
            for (auto v : idx)
                if (nbrs(v).size() == 1) {
                    start = v;
                    break;
                }
        }
        order.push_back(start);
        auto prev = start;
        auto cur = nbrs(start).front();
        while (order.size() < N) {
            order.push_back(cur);
            std::size_t next = cur;
            for (auto x : nbrs(cur))
                if (x != prev) {
                    next = x;
                    break;
                }
            prev = cur;
            cur = next;
        }
    }

    std::vector<VertexId> out;
    for (auto i : order)
        out.push_back(g.vertex(i));
    return out;
}

auto in_family(std::span<const Pattern> family, Pattern p) -> bool
{
    return std::find(family.begin(), family.end(), p) != family.end();
}

} // namespace

auto find_forbidden(const Graph & g, std::span<const Pattern> family) -> std::optional<ForbiddenOccurrence>
{
    auto n = g.order();
    bool want4 = in_family(family, Pattern::TwoK2) || in_family(family, Pattern::C4) || in_family(family, Pattern::P4);
    if (want4 && n >= 4) {
        std::array<std::size_t, 4> q{};
        for (q[0] = 0; q[0] < n; ++q[0])
            for (q[1] = q[0] + 1; q[1] < n; ++q[1])
                for (q[2] = q[1] + 1; q[2] < n; ++q[2])
                    for (q[3] = q[2] + 1; q[3] < n; ++q[3])
                        if (auto p = classify_indices(g, q); p && in_family(family, *p))
                            return ForbiddenOccurrence{*p, arrange(g, *p, q)};
    }
    if (in_family(family, Pattern::C5) && n >= 5) {
        std::array<std::size_t, 5> q{};
        for (q[0] = 0; q[0] < n; ++q[0])
            for (q[1] = q[0] + 1; q[1] < n; ++q[1])
                for (q[2] = q[1] + 1; q[2] < n; ++q[2])
                    for (q[3] = q[2] + 1; q[3] < n; ++q[3])
                        for (q[4] = q[3] + 1; q[4] < n; ++q[4])
                            if (classify_indices(g, q) == Pattern::C5)
                                return ForbiddenOccurrence{Pattern::C5, arrange(g, Pattern::C5, q)};
    }
    return std::nullopt;
}

auto classify_induced(const Graph & g, std::span<const VertexId> vs) -> std::optional<Pattern>
{
    if (vs.size() == 4) {
        std::array<std::size_t, 4> q{};
        for (std::size_t i = 0; i < 4; ++i)
            q[i] = g.index_of(vs[i]);
        return classify_indices(g, q);
    }
    if (vs.size() == 5) {
        std::array<std::size_t, 5> q{};
        for (std::size_t i = 0; i < 5; ++i)
            q[i] = g.index_of(vs[i]);
        return classify_indices(g, q);
    }
    return std::nullopt;
}

auto twin_partition(const Graph & g) -> std::vector<std::vector<VertexId>>
{
    std::map<std::vector<Graph::Word>, std::vector<VertexId>> by_row;
    std::vector<std::vector<VertexId> *> order;
    for (std::size_t i = 0; i < g.order(); ++i) {
        auto r = g.row(i);
        auto [it, fresh] = by_row.try_emplace(std::vector<Graph::Word>(r.begin(), r.end()));
        if (fresh)
            order.push_back(&it->second);
        it->second.push_back(g.vertex(i));
    }
    std::vector<std::vector<VertexId>> out;
    out.reserve(order.size());
    for (auto * cls : order)
        out.push_back(std::move(*cls));
    return out;
}

} // namespace contractk
