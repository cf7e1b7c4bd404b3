#include "contractk/oracles.hpp"

#include "contractk/errors.hpp"
#include "internal.hpp"

#include <cstdlib>
#include <string>

namespace contractk {

auto enumeration_cap_from_env() -> std::uint64_t
{
    if (const char * env = std::getenv("CONTRACTK_CAP")) {
        try {
            std::size_t used = 0;
            auto value = std::stoull(env, &used);
            if (used == std::string(env).size())
                return value;
        }
        catch (const std::exception &) {
        }
    }
    return kDefaultEnumerationCap;
}

auto BipartiteInstance::adjacent(std::size_t x, std::size_t y) const -> bool
{
    return std::find(edges.begin(), edges.end(), std::pair{x, y}) != edges.end();
}

void BipartiteInstance::validate() const
{
    for (auto [x, y] : edges)
        if (x >= x_count || y >= y_count)
            throw PreconditionViolated("bipartite edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                       ") is out of range");
}

auto subsets_up_to(std::uint64_t m, std::uint64_t k) -> std::uint64_t
{
    std::uint64_t total = 0, term = 1;
    for (std::uint64_t i = 0; i <= k && i <= m; ++i) {
        if (i > 0) {
            // term = C(m, i) = C(m, i-1) * (m - i + 1) / i
            unsigned __int128 next = static_cast<unsigned __int128>(term) * (m - i + 1) / i;
            if (next > UINT64_MAX)
                return UINT64_MAX;
            term = static_cast<std::uint64_t>(next);
        }
        if (total > UINT64_MAX - term)
            return UINT64_MAX;
        total += term;
    }
    return total;
}

auto oracle_contraction(const Graph & g, std::size_t k, GraphClass target, std::uint64_t cap)
    -> std::optional<ContractionSolution>
{
    auto n = g.order();
    std::size_t limit = std::min(k, n == 0 ? std::size_t{0} : n - 1);
    auto edges = g.edges();
    auto m = edges.size();
    limit = std::min(limit, m);
    if (subsets_up_to(m, limit) > cap)
        throw BudgetTooLarge("enumerating edge subsets of size <= " + std::to_string(limit) + " over " +
                             std::to_string(m) + " edges exceeds the cap of " + std::to_string(cap));

    if (auto chosen = detail::first_contraction_subset(g, edges, limit, target))
        return make_solution(g, std::move(*chosen));
    return std::nullopt;
}

namespace {

template <class Covered>
auto smallest_cover(std::size_t pool, std::size_t limit, Covered covered) -> std::optional<std::vector<std::size_t>>
{
    for (std::size_t size = 0; size <= std::min(limit, pool); ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            if (covered(pick))
                return pick;
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == pool - size + i - 1)
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

} // namespace

auto dominates_y(const BipartiteInstance & inst, const std::vector<std::size_t> & xs) -> bool
{
    std::vector<bool> hit(inst.y_count, false);
    for (auto [x, y] : inst.edges)
        if (std::find(xs.begin(), xs.end(), x) != xs.end())
            hit[y] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

auto dominates_x(const BipartiteInstance & inst, const std::vector<std::size_t> & ys) -> bool
{
    std::vector<bool> hit(inst.x_count, false);
    for (auto [x, y] : inst.edges)
        if (std::find(ys.begin(), ys.end(), y) != ys.end())
            hit[x] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

auto oracle_rbds(const BipartiteInstance & inst) -> std::optional<std::vector<std::size_t>>
{
    inst.validate();
    return smallest_cover(inst.y_count, inst.t, [&](const auto & ys) { return dominates_x(inst, ys); });
}

auto oracle_osds(const BipartiteInstance & inst) -> std::optional<std::vector<std::size_t>>
{
    inst.validate();
    return smallest_cover(inst.x_count, inst.t, [&](const auto & xs) { return dominates_y(inst, xs); });
}

auto oracle_osdomatic(const BipartiteInstance & inst) -> std::optional<std::vector<std::vector<std::size_t>>>
{
    inst.validate();
    if (inst.t < 1)
        throw PreconditionViolated("one-sided domatic number needs t >= 1");
    auto n = inst.x_count, t = inst.t;

    if (inst.y_count == 0) {
        // every block dominates an empty side, empty blocks included
        std::vector<std::vector<std::size_t>> blocks(t);
        for (std::size_t x = 0; x < n; ++x)
            blocks[std::min(x, t - 1)].push_back(x);
        return blocks;
    }
    if (n < t)
        return std::nullopt;

    // restricted growth strings with exactly t blocks
    std::vector<std::size_t> block(n, 0);
    std::optional<std::vector<std::vector<std::size_t>>> found;
    auto check = [&] {
        std::vector<std::vector<std::size_t>> blocks(t);
        for (std::size_t x = 0; x < n; ++x)
            blocks[block[x]].push_back(x);
        for (auto & b : blocks)
            if (!dominates_y(inst, b))
                return false;
        found = std::move(blocks);
        return true;
    };
    auto rec = [&](auto & self, std::size_t i, std::size_t used) -> bool {
        if (i == n)
            return used == t && check();
        if (n - i < t - used)
            return false;
        for (std::size_t b = 0; b < std::min(used + 1, t); ++b) {
            block[i] = b;
            if (self(self, i + 1, std::max(used, b + 1)))
                return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

} // namespace contractk
