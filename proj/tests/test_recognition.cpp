#include "contractk/errors.hpp"
#include "contractk/recognition.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace contractk;

namespace {

auto star(std::size_t leaves) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, static_cast<VertexId>(i));
    return Graph(leaves + 1, edges);
}

auto is_maximal_clique(const Graph & g, const std::vector<VertexId> & k) -> bool
{
    for (auto v : g.vertices()) {
        if (std::find(k.begin(), k.end(), v) != k.end())
            continue;
        if (std::all_of(k.begin(), k.end(), [&](VertexId c) { return g.adjacent(v, c); }))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("is_split examples")
{
    auto c5 = is_split(Graph(5, naive::cycle(5)));
    CHECK_FALSE(c5.split);
    REQUIRE(c5.witness);
    CHECK(c5.witness->pattern == Pattern::C5);

    auto p4 = is_split(Graph(4, naive::path(4)));
    CHECK(p4.split);
    REQUIRE(p4.partition);
    CHECK(p4.partition->clique == std::vector<VertexId>{1, 2});
    CHECK(p4.partition->independent == std::vector<VertexId>{0, 3});

    auto k5 = is_split(Graph(5, naive::complete(5)));
    CHECK(k5.split);
    REQUIRE(k5.partition);
    CHECK(k5.partition->clique.size() == 5);
    CHECK(k5.partition->independent.empty());
}

TEST_CASE("split_partition_max_clique examples")
{
    auto s = split_partition_max_clique(star(3));
    CHECK(s.clique.size() == 2);
    CHECK(std::find(s.clique.begin(), s.clique.end(), 0) != s.clique.end());
    CHECK(s.independent.size() == 2);

    auto e = split_partition_max_clique(Graph(3));
    CHECK(e.clique.size() == 1);
    CHECK(e.independent.size() == 2);

    auto p = split_partition_max_clique(Graph(4, naive::path(4)));
    CHECK(p.clique == std::vector<VertexId>{1, 2});

    CHECK_THROWS_AS(split_partition_max_clique(Graph(4, naive::cycle(4))), NotSplit);
}

TEST_CASE("is_threshold examples")
{
    auto p4 = is_threshold(Graph(4, naive::path(4)));
    CHECK_FALSE(p4.threshold);
    REQUIRE(p4.witness);
    CHECK(p4.witness->pattern == Pattern::P4);

    auto s = is_threshold(star(4));
    CHECK(s.threshold);
    REQUIRE(s.ordering);
    CHECK(valid_threshold_ordering(star(4), *s.ordering));

    auto c4 = is_threshold(Graph(4, naive::cycle(4)));
    CHECK_FALSE(c4.threshold);
    REQUIRE(c4.witness);
    CHECK(c4.witness->pattern == Pattern::C4);
}

TEST_CASE("is_clique examples")
{
    CHECK(is_clique(Graph(1)));
    auto k4 = naive::complete(4);
    k4.pop_back();
    CHECK_FALSE(is_clique(Graph(4, k4)));
    CHECK(is_clique(Graph(6, naive::complete(6))));
}

TEST_CASE("recognizers agree with forbidden-subgraph enumeration on all graphs up to 6 vertices")
{
    for (std::size_t n = 0; n <= 6; ++n)
        naive::each_graph(n, [&](const std::vector<Edge> & edges) {
            Graph g(n, edges);
            auto a = naive::matrix(n, edges);
            auto split = is_split(g);
            auto thr = is_threshold(g);
            REQUIRE(split.split == naive::is_split(a));
            REQUIRE(thr.threshold == naive::is_threshold(a));
            REQUIRE(is_split_graph(g) == split.split);
            REQUIRE(is_threshold_graph(g) == thr.threshold);
            REQUIRE(is_clique(g) == naive::is_clique(a));
            if (thr.threshold)
                REQUIRE(split.split);
        });
}

TEST_CASE("certificates satisfy their invariants")
{
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 3000; ++round) {
        auto n = 1 + naive::pick(rng, 9);
        std::vector<Edge> edges = naive::coin(rng, 0.5)
            ? naive::random_split_edges(rng, n, naive::pick(rng, n + 1), 0.5)
            : naive::random_edges(rng, n, 0.5);
        Graph g(n, edges);
        auto s = is_split(g);
        if (s.split) {
            REQUIRE(s.partition);
            CHECK(valid_split_partition(g, *s.partition));
            CHECK(is_maximal_clique(g, s.partition->clique));
            auto m = split_partition_max_clique(g);
            CHECK(valid_split_partition(g, m));
            CHECK(is_maximal_clique(g, m.clique));
        } else {
            REQUIRE(s.witness);
            CHECK(classify_induced(g, s.witness->vertices) == s.witness->pattern);
            CHECK(s.witness->pattern != Pattern::P4);
        }
        auto t = is_threshold(g);
        if (t.threshold) {
            REQUIRE(t.ordering);
            CHECK(valid_threshold_ordering(g, *t.ordering));
        } else {
            REQUIRE(t.witness);
            CHECK(classify_induced(g, t.witness->vertices) == t.witness->pattern);
            CHECK(t.witness->pattern != Pattern::C5);
        }
    }
}

TEST_CASE("validators reject broken certificates")
{
    Graph p4(4, naive::path(4));
    CHECK_FALSE(valid_split_partition(p4, SplitPartition{{0, 1, 2}, {3}}));
    CHECK_FALSE(valid_split_partition(p4, SplitPartition{{1}, {0, 2, 3}}));
    CHECK_FALSE(valid_split_partition(p4, SplitPartition{{1, 2}, {0}}));
    auto s = star(3);
    CHECK(valid_threshold_ordering(s, ThresholdOrdering{{1, 0}, {2, 3}}));
    CHECK_FALSE(valid_threshold_ordering(s, ThresholdOrdering{{0, 1}, {2, 3}}));
    CHECK_FALSE(valid_threshold_ordering(s, ThresholdOrdering{{0}, {1, 2}}));
}

TEST_CASE("in_class dispatches on the target")
{
    Graph c4(4, naive::cycle(4));
    CHECK_FALSE(in_class(c4, GraphClass::Split));
    Graph k3(3, naive::complete(3));
    CHECK(in_class(k3, GraphClass::Clique));
    CHECK(in_class(k3, GraphClass::Threshold));
    CHECK(std::string(class_name(GraphClass::Threshold)) == "threshold");
}
