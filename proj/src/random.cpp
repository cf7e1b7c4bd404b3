#include "contractk/random.hpp"

#include <numeric>

namespace contractk {

auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
{
    if (bound == 0)
        return 0;
    // rejection sampling removes the modulo bias
    auto limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

auto coin(std::mt19937_64 & rng, double p) -> bool
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

auto random_graph(std::mt19937_64 & rng, std::size_t n, double p) -> Graph
{
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng, p))
                g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    return g;
}

auto random_split_graph(std::mt19937_64 & rng, std::size_t n, std::size_t clique, double p) -> Graph
{
    clique = std::min(clique, n);
    std::vector<VertexId> label(n);
    std::iota(label.begin(), label.end(), VertexId{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(label[i - 1], label[uniform_below(rng, i)]);
    Graph g(n);
    for (std::size_t a = 0; a < clique; ++a)
        for (std::size_t b = a + 1; b < clique; ++b)
            g.add_edge(label[a], label[b]);
    for (std::size_t a = clique; a < n; ++a)
        for (std::size_t b = 0; b < clique; ++b)
            if (coin(rng, p))
                g.add_edge(label[a], label[b]);
    return g;
}

auto random_bipartite(std::mt19937_64 & rng, std::size_t xs, std::size_t ys, double p, std::size_t t)
    -> BipartiteInstance
{
    BipartiteInstance inst;
    inst.x_count = xs;
    inst.y_count = ys;
    inst.t = t;
    for (std::size_t x = 0; x < xs; ++x)
        for (std::size_t y = 0; y < ys; ++y)
            if (coin(rng, p))
                inst.edges.emplace_back(x, y);
    return inst;
}

} // namespace contractk
