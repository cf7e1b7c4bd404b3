#include "contractk/bench.hpp"

#include "contractk/errors.hpp"
#include "contractk/fpt.hpp"
#include "contractk/oracles.hpp"
#include "contractk/random.hpp"
#include "contractk/reductions.hpp"

#include <chrono>
#include <string>

namespace contractk {

namespace {

using Clock = std::chrono::steady_clock;

auto millis_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void compare(BenchRow & row, const Graph & g, std::size_t k, GraphClass target, std::uint64_t cap)
{
    SolverStats stats;
    auto mine = solve_contraction(g, k, target, &stats, cap);
    auto truth = oracle_contraction(g, k, target, cap);
    ++row.instances;
    row.nodes += stats.branch_nodes;
    if (mine.has_value() == truth.has_value())
        ++row.agree;
    if (mine) {
        ++row.yes;
        if (verify_solution(g, *mine, target, k))
            ++row.certified;
    }
}

/// Every bipartite instance in the grid, with t running over 0..|X|.
void for_each_bipartite(std::size_t max_x, std::size_t max_y, const std::function<void(const BipartiteInstance &)> & fn)
{
    for (std::size_t xs = 0; xs <= max_x; ++xs)
        for (std::size_t ys = 0; ys <= max_y; ++ys) {
            auto m = xs * ys;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
                for (std::size_t t = 0; t <= xs; ++t) {
                    BipartiteInstance inst;
                    inst.x_count = xs;
                    inst.y_count = ys;
                    inst.t = t;
                    for (std::size_t i = 0; i < m; ++i)
                        if ((mask >> i) & 1)
                            inst.edges.emplace_back(i / ys, i % ys);
                    fn(inst);
                }
        }
}

void tally(BenchRow & row, bool source, bool target, bool lifted)
{
    ++row.instances;
    if (source == target)
        ++row.agree;
    if (source) {
        ++row.yes;
        if (lifted)
            ++row.certified;
    }
}

} // namespace

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph &)> & fn)
{
    std::vector<Edge> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    if (pairs.size() >= 63)
        throw PreconditionViolated("too many labeled graphs to enumerate");
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                edges.push_back(pairs[i]);
        fn(Graph(n, edges));
    }
}

auto bench_exhaustive(GraphClass target, std::size_t max_n, std::size_t max_k, std::uint64_t cap)
    -> std::vector<BenchRow>
{
    std::vector<BenchRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 0; k <= max_k; ++k) {
            BenchRow row;
            row.label = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            auto start = Clock::now();
            for_each_labeled_graph(n, [&](const Graph & g) {
                if (target == GraphClass::Threshold && !is_split_graph(g))
                    return;
                compare(row, g, k, target, cap);
            });
            row.millis = millis_since(start);
            rows.push_back(std::move(row));
        }
    return rows;
}

auto bench_random_split(GraphClass target, std::size_t n, std::size_t max_k, std::size_t count, std::uint64_t seed,
                        std::uint64_t cap) -> std::vector<BenchRow>
{
    std::mt19937_64 rng(seed);
    std::vector<BenchRow> rows;
    for (std::size_t k = 0; k <= max_k; ++k) {
        BenchRow row;
        row.label = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        auto start = Clock::now();
        for (std::size_t i = 0; i < count; ++i) {
            auto clique = n < 2 ? n : 1 + uniform_below(rng, n - 1);
            auto p = 0.2 + 0.6 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
            compare(row, random_split_graph(rng, n, clique, p), k, target, cap);
        }
        row.millis = millis_since(start);
        rows.push_back(std::move(row));
    }
    return rows;
}

auto bench_reductions(std::size_t max_x, std::size_t max_y) -> std::vector<BenchRow>
{
    std::vector<BenchRow> rows;
    auto start = Clock::now();

    // The clique construction is only equivalent for connected sources.
    BenchRow clique{"clique-to-split"};
    for_each_bipartite(max_x, max_y, [&](const BipartiteInstance & inst) {
        auto g = bipartite_graph(inst);
        if (g.order() == 0 || !is_connected(g))
            return;
        auto art = gen_split_from_clique(g, inst.t);
        auto source = oracle_contraction(g, inst.t, GraphClass::Clique);
        auto target = oracle_contraction(art.graph, art.budget, GraphClass::Split);
        bool lifted = source &&
            verify_solution(art.graph, lift_clique_to_split(g, inst.t, art, *source), GraphClass::Split, art.budget);
        tally(clique, source.has_value(), target.has_value(), lifted);
    });
    clique.millis = millis_since(start);
    rows.push_back(clique);

    start = Clock::now();
    BenchRow rbds{"rbds-to-split"};
    for_each_bipartite(max_x, max_y, [&](const BipartiteInstance & inst) {
        GraphArtifact art;
        try {
            art = gen_split_from_rbds(inst);
        } catch (const PreconditionViolated &) {
            return;
        }
        auto source = oracle_rbds(inst);
        auto target = exact_contraction(art.graph, art.budget, GraphClass::Split);
        bool lifted = source &&
            verify_solution(art.graph, lift_rbds_to_split(inst, art, *source), GraphClass::Split, art.budget);
        tally(rbds, source.has_value(), target.has_value(), lifted);
    });
    rbds.millis = millis_since(start);
    rows.push_back(rbds);

    start = Clock::now();
    BenchRow osds{"osds-to-osdomatic"};
    for_each_bipartite(max_x, max_y, [&](const BipartiteInstance & inst) {
        BipartiteArtifact art;
        try {
            art = gen_osdomatic_from_osds(inst);
        } catch (const PreconditionViolated &) {
            return;
        }
        auto source = oracle_osds(inst);
        auto target = oracle_osdomatic(art.instance);
        bool lifted = source && valid_osdomatic_partition(art.instance, lift_osds_to_osdomatic(inst, *source));
        tally(osds, source.has_value(), target.has_value(), lifted);
    });
    osds.millis = millis_since(start);
    rows.push_back(osds);

    start = Clock::now();
    BenchRow domatic{"osdomatic-to-threshold"};
    for_each_bipartite(max_x, max_y, [&](const BipartiteInstance & inst) {
        GraphArtifact art;
        try {
            art = gen_threshold_from_osdomatic(inst);
        } catch (const PreconditionViolated &) {
            return;
        }
        auto source = oracle_osdomatic(inst);
        auto target = oracle_contraction(art.graph, art.budget, GraphClass::Threshold);
        bool lifted = source && verify_solution(art.graph, lift_osdomatic_to_threshold(inst, art, *source),
                                                GraphClass::Threshold, art.budget);
        tally(domatic, source.has_value(), target.has_value(), lifted);
    });
    domatic.millis = millis_since(start);
    rows.push_back(domatic);
    return rows;
}

} // namespace contractk
