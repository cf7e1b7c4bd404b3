#include "contractk/errors.hpp"
#include "contractk/fpt.hpp"
#include "contractk/reductions.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace contractk;

namespace {

auto bip(std::size_t xs, std::size_t ys, std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t t)
    -> BipartiteInstance
{
    BipartiteInstance inst;
    inst.x_count = xs;
    inst.y_count = ys;
    inst.edges = std::move(edges);
    inst.t = t;
    return inst;
}

auto four_by_four(std::size_t t) -> BipartiteInstance
{
    return bip(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 3}}, t);
}

/// Every bipartite graph with the given side sizes, as an edge list per mask.
template <typename Fn>
void each_bipartite(std::size_t xs, std::size_t ys, Fn fn)
{
    auto pairs = xs * ys;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < pairs; ++i)
            if ((mask >> i) & 1)
                edges.emplace_back(i / ys, i % ys);
        fn(edges);
    }
}

auto covers_x(const BipartiteInstance & inst) -> bool
{
    for (std::size_t x = 0; x < inst.x_count; ++x)
        if (std::none_of(inst.edges.begin(), inst.edges.end(), [&](auto e) { return e.first == x; }))
            return false;
    return true;
}

auto connected(const naive::Matrix & a) -> bool
{
    if (a.empty())
        return true;
    std::vector<int> label(a.size(), 0);
    return naive::block_connected(a, label, 0);
}

auto count_role(const std::vector<std::string> & roles, const std::string & prefix) -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(roles.begin(), roles.end(), [&](const std::string & r) {
        return r.rfind(prefix, 0) == 0;
    }));
}

} // namespace

// --- clique contraction -> split contraction --------------------------------

TEST_CASE("clique-to-split layout")
{
    auto k3 = gen_split_from_clique(Graph(3, naive::complete(3)), 1);
    CHECK(k3.graph.order() == 6);
    CHECK(k3.budget == 1);
    CHECK(count_role(k3.roles, "source:") == 3);
    CHECK(count_role(k3.roles, "apex:") == 3);
    for (VertexId a = 3; a < 6; ++a) {
        CHECK(k3.graph.degree(a) == 3);
        for (VertexId b = a + 1; b < 6; ++b)
            CHECK_FALSE(k3.graph.adjacent(a, b));
    }

    Graph p4(4, naive::path(4));
    auto art = gen_split_from_clique(p4, 1);
    CHECK(art.graph.order() == 7);
    CHECK_FALSE(naive::min_contractions(naive::matrix(art.graph), GraphClass::Split, 1));
    CHECK_FALSE(naive::min_contractions(naive::matrix(p4), GraphClass::Clique, 1));

    Graph p3(3, naive::path(3));
    auto yes = gen_split_from_clique(p3, 1);
    auto source = oracle_contraction(p3, 1, GraphClass::Clique);
    REQUIRE(source);
    auto lifted = lift_clique_to_split(p3, 1, yes, *source);
    CHECK(verify_solution(yes.graph, lifted, GraphClass::Split, 1));
}

TEST_CASE("clique-to-split rejects a bad source certificate")
{
    Graph p4(4, naive::path(4));
    auto art = gen_split_from_clique(p4, 1);
    ContractionSolution bogus;
    bogus.edges = {Edge(0, 1)};
    bogus.result = p4;
    CHECK_THROWS_AS(lift_clique_to_split(p4, 1, art, bogus), InvalidSourceCertificate);
}

TEST_CASE("clique-to-split round trips on small connected graphs")
{
    for (std::size_t n = 1; n <= 5; ++n)
        naive::each_graph(n, [&](const std::vector<Edge> & edges) {
            auto a = naive::matrix(n, edges);
            if (!connected(a))
                return;
            Graph g(n, edges);
            for (std::size_t k = 0; k <= 2; ++k) {
                auto art = gen_split_from_clique(g, k);
                auto source = naive::min_contractions(a, GraphClass::Clique, k);
                auto target = naive::min_contractions(naive::matrix(art.graph), GraphClass::Split, k);
                REQUIRE(source.has_value() == target.has_value());
                if (source) {
                    auto cert = oracle_contraction(g, k, GraphClass::Clique);
                    REQUIRE(cert);
                    CHECK(verify_solution(art.graph, lift_clique_to_split(g, k, art, *cert), GraphClass::Split, k));
                }
            }
        });
}

TEST_CASE("clique-to-split on a disconnected source can flip to yes")
{
    // Two isolated vertices cannot become a clique, yet with two apexes
    // the target is a C4 that one contraction makes split.
    Graph g(2);
    auto art = gen_split_from_clique(g, 1);
    CHECK_FALSE(naive::min_contractions(naive::matrix(g), GraphClass::Clique, 1));
    CHECK(naive::min_contractions(naive::matrix(art.graph), GraphClass::Split, 1));
}

// --- red-blue dominating set -> split contraction ---------------------------

TEST_CASE("rbds-to-split layout")
{
    auto inst = bip(1, 1, {{0, 0}}, 1);
    auto art = gen_split_from_rbds(inst);
    CHECK(art.graph.order() == 10);
    CHECK(art.budget == 2);
    CHECK(art.roles.size() == 10);
    CHECK(art.roles[0] == "x:0");
    CHECK(art.roles[1] == "y:0");
    CHECK(art.roles[2] == "u");
    CHECK(count_role(art.roles, "clique:") == 4);
    CHECK(count_role(art.roles, "leaf:") == 3);
    for (VertexId v = 0; v < 10; ++v)
        if (art.roles[v].rfind("leaf:", 0) == 0)
            CHECK(art.graph.degree(v) == 1);
    CHECK(art.graph.adjacent(2, 1)); // u sees Y
    CHECK(split_contraction(art.graph, art.budget));

    auto lifted = lift_rbds_to_split(inst, art, {0});
    CHECK(verify_solution(art.graph, lifted, GraphClass::Split, art.budget));
    auto back = rbds_from_split(inst, art, lifted.edges);
    CHECK(back == std::vector<std::size_t>{0});
}

TEST_CASE("rbds-to-split preconditions")
{
    CHECK_THROWS_AS(gen_split_from_rbds(bip(2, 1, {{0, 0}}, 1)), PreconditionViolated);
    CHECK_THROWS_AS(gen_split_from_rbds(bip(1, 1, {{0, 0}}, 2)), PreconditionViolated);
    CHECK_THROWS_AS(gen_split_from_rbds(bip(1, 1, {{0, 3}}, 1)), PreconditionViolated);
    auto inst = bip(2, 2, {{0, 0}, {1, 1}}, 1);
    auto art = gen_split_from_rbds(inst);
    CHECK_THROWS_AS(lift_rbds_to_split(inst, art, {0}), InvalidSourceCertificate);
    CHECK_THROWS_AS(lift_rbds_to_split(inst, art, {7}), InvalidSourceCertificate);
}

TEST_CASE("rbds-to-split round trips")
{
    for (std::size_t xs = 1; xs <= 2; ++xs)
        for (std::size_t ys = 1; ys <= 2; ++ys)
            each_bipartite(xs, ys, [&](const auto & edges) {
                for (std::size_t t = 0; t <= xs; ++t) {
                    auto inst = bip(xs, ys, edges, t);
                    if (!covers_x(inst))
                        continue;
                    auto art = gen_split_from_rbds(inst);
                    bool source = naive::rbds(inst);
                    auto target = exact_contraction(art.graph, art.budget, GraphClass::Split);
                    if (xs == 1)
                        REQUIRE(naive::min_contractions(naive::matrix(art.graph), GraphClass::Split, art.budget)
                                    .has_value() == target.has_value());
                    REQUIRE(source == target.has_value());
                    if (!source)
                        continue;
                    auto dom = oracle_rbds(inst);
                    REQUIRE(dom);
                    CHECK(verify_solution(art.graph, lift_rbds_to_split(inst, art, *dom), GraphClass::Split,
                                          art.budget));
                    auto back = rbds_from_split(inst, art, target->edges);
                    CHECK(back.size() <= t);
                    CHECK(dominates_x(inst, back));
                }
            });
}

// --- one-sided dominating set -> one-sided domatic number -------------------

TEST_CASE("osds-to-osdomatic layout")
{
    auto art = gen_osdomatic_from_osds(four_by_four(2));
    CHECK(art.instance.x_count == 6);
    CHECK(art.instance.y_count == 5);
    CHECK(art.instance.t == 3);
    CHECK(art.roles.size() == 11);
    CHECK(art.roles[4] == "z:0");
    CHECK(art.roles.back() == "w");
    CHECK(art.instance.adjacent(4, 0));
    CHECK(art.instance.adjacent(0, 4));
    CHECK_FALSE(art.instance.adjacent(4, 4));

    CHECK_THROWS_AS(gen_osdomatic_from_osds(four_by_four(0)), PreconditionViolated);
    CHECK_THROWS_AS(gen_osdomatic_from_osds(four_by_four(5)), PreconditionViolated);
}

TEST_CASE("osds-to-osdomatic lifts both ways on the worked example")
{
    auto inst = four_by_four(2);
    auto dom = oracle_osds(inst);
    REQUIRE(dom);
    auto target = gen_osdomatic_from_osds(inst).instance;
    auto part = lift_osds_to_osdomatic(inst, *dom);
    CHECK(valid_osdomatic_partition(target, part));
    auto back = osds_from_osdomatic(inst, part);
    CHECK(back.size() <= 2);
    CHECK(dominates_y(inst, back));
    CHECK_THROWS_AS(lift_osds_to_osdomatic(inst, {0}), InvalidSourceCertificate);
    CHECK_THROWS_AS(osds_from_osdomatic(inst, XPartition{{0, 1, 2, 3, 4, 5}}), InvalidSourceCertificate);
}

TEST_CASE("osds-to-osdomatic round trips")
{
    for (std::size_t xs = 1; xs <= 3; ++xs)
        for (std::size_t ys = 0; ys <= 2; ++ys)
            each_bipartite(xs, ys, [&](const auto & edges) {
                for (std::size_t t = 1; t <= xs; ++t) {
                    auto inst = bip(xs, ys, edges, t);
                    auto target = gen_osdomatic_from_osds(inst).instance;
                    bool source = naive::osds(inst);
                    REQUIRE(source == naive::osdomatic(target));
                    if (!source)
                        continue;
                    auto dom = oracle_osds(inst);
                    REQUIRE(dom);
                    CHECK(valid_osdomatic_partition(target, lift_osds_to_osdomatic(inst, *dom)));
                    auto part = oracle_osdomatic(target);
                    REQUIRE(part);
                    auto back = osds_from_osdomatic(inst, *part);
                    CHECK(back.size() <= t);
                    CHECK(dominates_y(inst, back));
                }
            });
}

// --- one-sided domatic number -> threshold contraction ----------------------

TEST_CASE("osdomatic-to-threshold layout")
{
    auto inst = bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 1);
    auto art = gen_threshold_from_osdomatic(inst);
    CHECK(art.graph.order() == 16);
    CHECK(art.budget == 1);
    CHECK(count_role(art.roles, "k:") == 2);
    CHECK(count_role(art.roles, "a:") == 5);
    CHECK(count_role(art.roles, "b:") == 3);
    CHECK(count_role(art.roles, "i:") == 6);
    CHECK(is_split_graph(art.graph));
    CHECK(art.roles[10] == "i:0:0");

    auto part = oracle_osdomatic(inst);
    REQUIRE(part);
    auto lifted = lift_osdomatic_to_threshold(inst, art, *part);
    CHECK(verify_solution(art.graph, lifted, GraphClass::Threshold, art.budget));

    CHECK_THROWS_AS(gen_threshold_from_osdomatic(bip(2, 1, {{0, 0}}, 0)), PreconditionViolated);
    CHECK_THROWS_AS(gen_threshold_from_osdomatic(bip(2, 1, {{0, 0}}, 3)), PreconditionViolated);
    CHECK_THROWS_AS(lift_osdomatic_to_threshold(inst, art, XPartition{{0}}), InvalidSourceCertificate);
}

TEST_CASE("osdomatic-to-threshold round trips")
{
    for (std::size_t xs = 1; xs <= 3; ++xs)
        for (std::size_t ys = 0; ys <= 2; ++ys)
            each_bipartite(xs, ys, [&](const auto & edges) {
                for (std::size_t t = 1; t <= xs; ++t) {
                    auto inst = bip(xs, ys, edges, t);
                    auto art = gen_threshold_from_osdomatic(inst);
                    REQUIRE(is_split_graph(art.graph));
                    bool source = naive::osdomatic(inst);
                    auto target = naive::min_contractions(naive::matrix(art.graph), GraphClass::Threshold, art.budget);
                    REQUIRE(source == target.has_value());
                    if (!source)
                        continue;
                    auto part = oracle_osdomatic(inst);
                    REQUIRE(part);
                    CHECK(valid_osdomatic_partition(inst, *part));
                    CHECK(verify_solution(art.graph, lift_osdomatic_to_threshold(inst, art, *part),
                                          GraphClass::Threshold, art.budget));
                }
            });
}

TEST_CASE("bipartite_graph places X first")
{
    auto g = bipartite_graph(bip(2, 2, {{0, 1}, {1, 0}}, 1));
    CHECK(g.order() == 4);
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("generated budgets stay linear in the source parameter")
{
    std::mt19937_64 rng(55);
    for (int round = 0; round < 100; ++round) {
        auto xs = 1 + naive::pick(rng, 5);
        auto ys = 1 + naive::pick(rng, 5);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t x = 0; x < xs; ++x) {
            edges.emplace_back(x, naive::pick(rng, ys));
            for (std::size_t y = 0; y < ys; ++y)
                if (naive::coin(rng, 0.3) && y != edges.back().second)
                    edges.emplace_back(x, y);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        auto t = 1 + naive::pick(rng, xs);
        auto inst = bip(xs, ys, edges, t);
        auto rb = gen_split_from_rbds(inst);
        CHECK(rb.budget == xs + t);
        CHECK(rb.graph.order() == xs + ys + (xs + t + 3) + xs * (xs + t + 1));
        auto dm = gen_osdomatic_from_osds(inst);
        CHECK(dm.instance.t == xs - t + 1);
        auto th = gen_threshold_from_osdomatic(inst);
        CHECK(th.budget == xs - t);
        CHECK(th.graph.order() == 4 * xs + 2 + (xs + 1) * ys);
    }
}
