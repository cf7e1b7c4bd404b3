#pragma once

// Independent reference implementations for the tests. Nothing here calls
// the library's recognizers, oracles or contraction code; graphs are plain
// adjacency matrices built from edge lists.

#include "contractk/graph.hpp"
#include "contractk/oracles.hpp"
#include "contractk/recognition.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace naive {

using Matrix = std::vector<std::vector<bool>>;

inline auto matrix(std::size_t n, const std::vector<contractk::Edge> & edges) -> Matrix
{
    Matrix a(n, std::vector<bool>(n, false));
    for (auto e : edges)
        a[e.u][e.v] = a[e.v][e.u] = true;
    return a;
}

/// Reads a library graph into a matrix indexed by position.
inline auto matrix(const contractk::Graph & g) -> Matrix
{
    auto n = g.order();
    Matrix a(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = i != j && g.adjacent(g.vertex(i), g.vertex(j));
    return a;
}

enum class Shape { None, TwoK2, C4, C5, P4 };

/// Identifies the induced shape on vs from degrees and edge count alone.
inline auto shape(const Matrix & a, const std::vector<std::size_t> & vs) -> Shape
{
    std::size_t edges = 0;
    std::vector<int> deg(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (a[vs[i]][vs[j]]) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    auto count = [&](int d) { return std::count(deg.begin(), deg.end(), d); };
    if (vs.size() == 4) {
        if (edges == 2 && count(1) == 4)
            return Shape::TwoK2;
        if (edges == 4 && count(2) == 4)
            return Shape::C4;
        if (edges == 3 && count(1) == 2 && count(2) == 2)
            return Shape::P4;
    }
    if (vs.size() == 5 && edges == 5 && count(2) == 5)
        return Shape::C5;
    return Shape::None;
}

/// Whether some 4- or 5-subset induces one of the listed shapes.
inline auto contains_any(const Matrix & a, std::initializer_list<Shape> family) -> bool
{
    auto n = a.size();
    auto wanted = [&](Shape s) { return std::find(family.begin(), family.end(), s) != family.end(); };
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    vs = {i, j, k, l};
                    if (wanted(shape(a, vs)))
                        return true;
                    if (!wanted(Shape::C5))
                        continue;
                    for (std::size_t m = l + 1; m < n; ++m) {
                        vs = {i, j, k, l, m};
                        if (shape(a, vs) == Shape::C5)
                            return true;
                    }
                }
    return false;
}

inline auto is_split(const Matrix & a) -> bool
{
    return !contains_any(a, {Shape::TwoK2, Shape::C4, Shape::C5});
}

inline auto is_threshold(const Matrix & a) -> bool
{
    return !contains_any(a, {Shape::TwoK2, Shape::C4, Shape::P4});
}

inline auto is_clique(const Matrix & a) -> bool
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!a[i][j])
                return false;
    return true;
}

inline auto in_class(const Matrix & a, contractk::GraphClass c) -> bool
{
    switch (c) {
    case contractk::GraphClass::Split:
        return is_split(a);
    case contractk::GraphClass::Threshold:
        return is_threshold(a);
    case contractk::GraphClass::Clique:
        return is_clique(a);
    }
    return false;
}

/// Whether the vertices with label `block` induce a connected subgraph.
inline auto block_connected(const Matrix & a, const std::vector<int> & label, int block) -> bool
{
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < label.size(); ++v)
        if (label[v] == block)
            members.push_back(v);
    std::vector<bool> seen(a.size(), false);
    std::vector<std::size_t> stack{members.front()};
    seen[members.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : members)
            if (!seen[w] && a[v][w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == members.size();
}

/// Quotient adjacency of a labelling into `blocks` classes.
inline auto quotient(const Matrix & a, const std::vector<int> & label, int blocks) -> Matrix
{
    Matrix q(blocks, std::vector<bool>(blocks, false));
    for (std::size_t u = 0; u < a.size(); ++u)
        for (std::size_t v = 0; v < a.size(); ++v)
            if (a[u][v] && label[u] != label[v])
                q[label[u]][label[v]] = true;
    return q;
}

/**
 * Minimum number of contractions turning a into the class, found by trying
 * every partition of the vertices into connected blocks (restricted growth
 * strings). n - (#blocks) contractions realise a partition. Returns nothing
 * when more than max_k would be needed.
 */
inline auto min_contractions(const Matrix & a, contractk::GraphClass c, std::size_t max_k)
    -> std::optional<std::size_t>
{
    auto n = a.size();
    if (n == 0)
        return 0;
    std::optional<std::size_t> best;
    std::vector<int> label(n, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t v, int used) {
        if (n - static_cast<std::size_t>(used) > max_k + (n - v))
            return; // even one block per remaining vertex is over budget
        if (v == n) {
            auto cost = n - static_cast<std::size_t>(used);
            if (cost > max_k || (best && cost >= *best))
                return;
            for (int b = 0; b < used; ++b)
                if (!block_connected(a, label, b))
                    return;
            if (in_class(quotient(a, label, used), c))
                best = cost;
            return;
        }
        for (int b = 0; b <= used; ++b) {
            label[v] = b;
            go(v + 1, b == used ? used + 1 : used);
        }
    };
    go(0, 0);
    return best;
}

// --- bipartite references ----------------------------------------------------

inline auto rbds(const contractk::BipartiteInstance & inst) -> bool
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.y_count); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > inst.t)
            continue;
        bool all = true;
        for (std::size_t x = 0; x < inst.x_count && all; ++x) {
            bool hit = false;
            for (auto [ex, ey] : inst.edges)
                hit = hit || (ex == x && ((mask >> ey) & 1));
            all = hit;
        }
        if (all)
            return true;
    }
    return false;
}

inline auto osds(const contractk::BipartiteInstance & inst) -> bool
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.x_count); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > inst.t)
            continue;
        bool all = true;
        for (std::size_t y = 0; y < inst.y_count && all; ++y) {
            bool hit = false;
            for (auto [ex, ey] : inst.edges)
                hit = hit || (ey == y && ((mask >> ex) & 1));
            all = hit;
        }
        if (all)
            return true;
    }
    return false;
}

/// Assigns every x one of t colours (t^|X| ways) and checks each colour class dominates Y.
inline auto osdomatic(const contractk::BipartiteInstance & inst) -> bool
{
    auto t = inst.t;
    if (t == 0)
        return false;
    std::vector<std::size_t> colour(inst.x_count, 0);
    while (true) {
        bool ok = true;
        for (std::size_t c = 0; c < t && ok; ++c)
            for (std::size_t y = 0; y < inst.y_count && ok; ++y) {
                bool hit = false;
                for (auto [ex, ey] : inst.edges)
                    hit = hit || (ey == y && colour[ex] == c);
                ok = hit;
            }
        // With Y empty every colouring works, empty classes included.
        if (ok)
            return true;
        std::size_t i = 0;
        while (i < colour.size() && colour[i] == t - 1)
            colour[i++] = 0;
        if (i == colour.size())
            return false;
        ++colour[i];
    }
}

// --- hand-rolled generators ---------------------------------------------------

inline auto coin(std::mt19937_64 & rng, double p) -> bool
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline auto pick(std::mt19937_64 & rng, std::size_t bound) -> std::size_t
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

inline auto random_edges(std::mt19937_64 & rng, std::size_t n, double p) -> std::vector<contractk::Edge>
{
    std::vector<contractk::Edge> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng, p))
                out.emplace_back(static_cast<contractk::VertexId>(a), static_cast<contractk::VertexId>(b));
    return out;
}

/// Split graph with a shuffled labelling: clique on `k` vertices, random cross edges.
inline auto random_split_edges(std::mt19937_64 & rng, std::size_t n, std::size_t k, double p)
    -> std::vector<contractk::Edge>
{
    std::vector<contractk::VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<contractk::VertexId>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<contractk::Edge> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if ((b < k) || (a < k && coin(rng, p)))
                out.emplace_back(perm[a], perm[b]);
    return out;
}

/// All labeled graphs on n vertices, as edge lists.
inline void each_graph(std::size_t n, const std::function<void(const std::vector<contractk::Edge> &)> & fn)
{
    std::vector<contractk::Edge> pairs;
    for (contractk::VertexId a = 0; a < n; ++a)
        for (contractk::VertexId b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    std::vector<contractk::Edge> edges;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                edges.push_back(pairs[i]);
        fn(edges);
    }
}

// Small named graphs on ids 0..n-1.
inline auto path(std::size_t n) -> std::vector<contractk::Edge>
{
    std::vector<contractk::Edge> out;
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.emplace_back(static_cast<contractk::VertexId>(i), static_cast<contractk::VertexId>(i + 1));
    return out;
}

inline auto cycle(std::size_t n) -> std::vector<contractk::Edge>
{
    auto out = path(n);
    out.emplace_back(0, static_cast<contractk::VertexId>(n - 1));
    return out;
}

inline auto complete(std::size_t n) -> std::vector<contractk::Edge>
{
    std::vector<contractk::Edge> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            out.emplace_back(static_cast<contractk::VertexId>(a), static_cast<contractk::VertexId>(b));
    return out;
}

} // namespace naive
