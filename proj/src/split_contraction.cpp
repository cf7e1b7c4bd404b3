#include "contractk/fpt.hpp"

#include "contractk/errors.hpp"
#include "contractk/recognition.hpp"
#include "internal.hpp"

#include <set>
#include <unordered_map>

namespace contractk {

namespace {

auto adjacent_to_any(const Graph & g, VertexId v, const std::vector<VertexId> & targets) -> bool
{
    return std::any_of(targets.begin(), targets.end(), [&](VertexId t) { return g.adjacent(v, t); });
}

auto lift_all(const Graph & original, const detail::ContractionTracker & tracker, const std::vector<Edge> & local)
    -> std::vector<Edge>
{
    auto out = tracker.lifted();
    for (auto e : local)
        out.push_back(detail::lift_edge(original, tracker.map(), e.u, e.v));
    return out;
}

auto finish(const Graph & g, std::vector<Edge> edges, std::size_t k) -> ContractionSolution
{
    auto s = make_solution(g, std::move(edges));
    if (s.edges.size() > k || !is_split_graph(s.result))
        throw InternalInvariantViolation("split contraction produced an invalid certificate");
    return s;
}

/// The search used when the clique of the split subgraph exceeds 2k.
struct LargeClique {
    const Graph & g;
    std::size_t k;
    std::vector<VertexId> removed; // V_k
    std::vector<VertexId> clique;  // K_H
    std::vector<VertexId> indep;   // I_H
    SolverStats * stats;
    std::unordered_map<std::string, std::size_t> visited;

    auto clique_case(const detail::ContractionTracker & tracker, std::size_t budget, std::vector<VertexId> keep)
        -> std::optional<ContractionSolution>
    {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        if (stats)
            ++stats->subsolver_calls;
        auto sub = tracker.current().induced(keep);
        if (auto inner = clique_contraction(sub, budget, stats))
            return finish(g, lift_all(g, tracker, inner->edges), k);
        return std::nullopt;
    }

    auto try_partition(const detail::ContractionTracker & tracker, std::size_t budget,
                       const std::vector<VertexId> & kh, const std::vector<VertexId> & ih,
                       const std::vector<VertexId> & r, const std::vector<VertexId> & kp,
                       const std::vector<VertexId> & ip) -> std::optional<ContractionSolution>
    {
        const auto & gp = tracker.current();
        std::vector<VertexId> core = r;
        core.insert(core.end(), kp.begin(), kp.end());

        // Case 1: the whole of K_H stays on the clique side.
        {
            std::vector<VertexId> keep = core;
            keep.insert(keep.end(), kh.begin(), kh.end());
            for (auto v : ih)
                if (adjacent_to_any(gp, v, ip))
                    keep.push_back(v);
            if (auto s = clique_case(tracker, budget, std::move(keep)))
                return s;
        }

        // Case 2: exactly one vertex w of K_H ends on the independent side.
        for (auto w : kh) {
            if (adjacent_to_any(gp, w, ip))
                continue;
            std::vector<VertexId> keep = core;
            for (auto c : kh)
                if (c != w)
                    keep.push_back(c);
            for (auto v : ih)
                if (gp.adjacent(v, w) || adjacent_to_any(gp, v, ip))
                    keep.push_back(v);
            if (auto s = clique_case(tracker, budget, std::move(keep)))
                return s;
        }
        return std::nullopt;
    }

    /// Images of V_k, plus the parts of K_H and I_H that are still untouched.
    void classify(const detail::ContractionTracker & tracker, std::vector<VertexId> & vk, std::vector<VertexId> & kh,
                  std::vector<VertexId> & ih) const
    {
        const auto & gp = tracker.current();
        std::set<VertexId> images;
        for (auto v : removed)
            images.insert(tracker.map()(v));
        vk.assign(images.begin(), images.end());
        kh.clear();
        ih.clear();
        for (auto v : clique)
            if (gp.contains(v))
                kh.push_back(v);
        for (auto v : indep)
            if (gp.contains(v))
                ih.push_back(v);
    }

    auto try_contracted(const detail::ContractionTracker & tracker, std::size_t budget)
        -> std::optional<ContractionSolution>
    {
        const auto & gp = tracker.current();
        std::vector<VertexId> vk, kh, ih;
        classify(tracker, vk, kh, ih);

        // Every assignment of V'_k to (R, K_p, I_p), as a base-3 counter.
        std::vector<int> side(vk.size(), 0);
        while (true) {
            std::vector<VertexId> r, kp, ip;
            for (std::size_t i = 0; i < vk.size(); ++i)
                (side[i] == 0 ? r : side[i] == 1 ? kp : ip).push_back(vk[i]);

            bool ok = r.size() <= budget;
            for (std::size_t a = 0; ok && a < kp.size(); ++a)
                for (std::size_t b = a + 1; ok && b < kp.size(); ++b)
                    ok = gp.adjacent(kp[a], kp[b]);
            for (std::size_t a = 0; ok && a < ip.size(); ++a)
                for (std::size_t b = a + 1; ok && b < ip.size(); ++b)
                    ok = !gp.adjacent(ip[a], ip[b]);
            if (ok) {
                if (stats)
                    ++stats->partitions;
                if (auto s = try_partition(tracker, budget, kh, ih, r, kp, ip))
                    return s;
            }

            std::size_t i = 0;
            while (i < side.size() && side[i] == 2)
                side[i++] = 0;
            if (i == side.size())
                break;
            ++side[i];
        }
        return std::nullopt;
    }

    /**
     * A vertex of V'_k may finish inside an independent-side witness set
     * together with vertices of H. Such a set is grown here one neighbour at
     * a time; afterwards it is an untouched vertex of V'_k and the partition
     * step can place it in I_p.
     */
    auto absorb(const detail::ContractionTracker & tracker, std::size_t budget) -> std::optional<ContractionSolution>
    {
        auto [it, fresh] = visited.emplace(detail::partition_key(tracker.map()), budget);
        if (!fresh) {
            if (it->second >= budget)
                return std::nullopt;
            it->second = budget;
        }
        if (auto s = try_contracted(tracker, budget))
            return s;
        if (budget == 0)
            return std::nullopt;

        const auto & gp = tracker.current();
        std::vector<VertexId> vk, kh, ih;
        classify(tracker, vk, kh, ih);
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (auto r : vk) {
            auto i = gp.index_of(r);
            for (auto j : gp.neighbor_indices(i))
                if (!std::binary_search(vk.begin(), vk.end(), gp.vertex(j)))
                    candidates.emplace_back(std::min(i, j), std::max(i, j));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (auto e : detail::dedup_by_twins(gp, candidates)) {
            auto child = tracker;
            child.contract(e);
            if (auto s = absorb(child, budget - 1))
                return s;
        }
        return std::nullopt;
    }

    auto solve() -> std::optional<ContractionSolution>
    {
        std::vector<Edge> inner;
        for (std::size_t a = 0; a < removed.size(); ++a)
            for (std::size_t b = a + 1; b < removed.size(); ++b)
                if (g.adjacent(removed[a], removed[b]))
                    inner.emplace_back(removed[a], removed[b]);

        auto m = inner.size();
        for (std::size_t size = 0; size <= std::min(k, m); ++size) {
            std::vector<std::size_t> pick(size);
            std::iota(pick.begin(), pick.end(), std::size_t{0});
            while (true) {
                detail::UnionFind uf(g.order());
                bool forest = true;
                for (std::size_t i = 0; i < size && forest; ++i)
                    forest = uf.unite(static_cast<std::uint32_t>(g.index_of(inner[pick[i]].u)),
                                      static_cast<std::uint32_t>(g.index_of(inner[pick[i]].v)));
                if (forest) {
                    if (stats)
                        ++stats->contraction_sets;
                    detail::ContractionTracker tracker(g);
                    for (auto p : pick)
                        tracker.contract_original(inner[p]);
                    if (auto s = absorb(tracker, k - size))
                        return s;
                }
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == m - size + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
        return std::nullopt;
    }
};

auto twin_class_bound(std::size_t k) -> std::uint64_t
{
    // 2^{4k} + 4k, saturating
    if (4 * k >= 63)
        return UINT64_MAX;
    return (std::uint64_t{1} << (4 * k)) + 4 * k;
}

} // namespace

auto twin_rule_one(const Graph & g, std::size_t k) -> bool
{
    return twin_partition(g).size() > twin_class_bound(k);
}

auto twin_rule_two_once(const Graph & g, std::size_t k) -> Graph
{
    for (auto & cls : twin_partition(g)) {
        if (cls.size() > 2 * k + 5) {
            std::vector<VertexId> drop(cls.begin() + static_cast<std::ptrdiff_t>(2 * k + 5), cls.end());
            return g.without(drop);
        }
    }
    return g;
}

auto twin_rule_two(const Graph & g, std::size_t k) -> Graph
{
    std::vector<VertexId> drop;
    for (auto & cls : twin_partition(g))
        if (cls.size() > 2 * k + 5)
            drop.insert(drop.end(), cls.begin() + static_cast<std::ptrdiff_t>(2 * k + 5), cls.end());
    return g.without(drop);
}

auto split_contraction(const Graph & g, std::size_t k, SolverStats * stats, std::uint64_t cap)
    -> std::optional<ContractionSolution>
{
    if (g.order() <= 2 * k) {
        if (stats)
            ++stats->subsolver_calls;
        return oracle_contraction(g, k, GraphClass::Split, cap);
    }

    auto removed = split_vertex_deletion(g, 2 * k);
    if (!removed)
        return std::nullopt;
    auto h = g.without(*removed);
    auto part = split_partition_max_clique(h);

    if (part.clique.size() > 2 * k) {
        std::sort(part.clique.begin(), part.clique.end());
        std::sort(part.independent.begin(), part.independent.end());
        LargeClique search{g, k, *removed, part.clique, part.independent, stats, {}};
        return search.solve();
    }

    if (twin_rule_one(g, k))
        return std::nullopt;
    auto reduced = twin_rule_two(g, k);
    if (stats) {
        stats->kernel_vertices = reduced.order();
        ++stats->subsolver_calls;
    }
    auto s = oracle_contraction(reduced, k, GraphClass::Split, cap);
    if (!s)
        return std::nullopt;
    return finish(g, std::move(s->edges), k);
}

} // namespace contractk
