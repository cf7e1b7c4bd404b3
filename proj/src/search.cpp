#include "internal.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace contractk::detail {

auto twin_classes(const Graph & g) -> std::vector<std::size_t>
{
    auto n = g.order();
    std::map<std::vector<Graph::Word>, std::vector<std::size_t>> open, closed;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Graph::Word> row(g.row(i).begin(), g.row(i).end());
        open[row].push_back(i);
        row[i / 64] |= Graph::Word{1} << (i % 64);
        closed[row].push_back(i);
    }
    // A vertex cannot have both an open and a closed twin, so the two
    // families never claim the same vertex.
    std::vector<std::size_t> cls(n);
    std::iota(cls.begin(), cls.end(), std::size_t{0});
    for (auto * family : {&open, &closed})
        for (auto & [row, members] : *family)
            if (members.size() > 1)
                for (auto i : members)
                    cls[i] = members.front();
    return cls;
}

auto dedup_by_twins(const Graph & g, std::span<const std::pair<std::size_t, std::size_t>> candidates)
    -> std::vector<Edge>
{
    auto cls = twin_classes(g);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<Edge> out;
    for (auto [a, b] : candidates) {
        auto key = std::minmax(cls[a], cls[b]);
        if (seen.insert({key.first, key.second}).second)
            out.emplace_back(g.vertex(a), g.vertex(b));
    }
    return out;
}

auto partition_key(const VertexMap & map) -> std::string
{
    std::unordered_map<VertexId, std::uint32_t> relabel;
    std::string key;
    key.reserve(map.entries().size() * sizeof(std::uint32_t));
    for (auto & entry : map.entries()) {
        auto it = relabel.emplace(entry.second, static_cast<std::uint32_t>(relabel.size())).first;
        auto label = it->second;
        key.append(reinterpret_cast<const char *>(&label), sizeof label);
    }
    return key;
}

auto first_contraction_subset(const Graph & g, std::span<const Edge> candidates, std::size_t k, GraphClass target)
    -> std::optional<std::vector<Edge>>
{
    auto n = g.order();
    auto m = candidates.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> at(m);
    for (std::size_t i = 0; i < m; ++i)
        at[i] = {static_cast<std::uint32_t>(g.index_of(candidates[i].u)),
                 static_cast<std::uint32_t>(g.index_of(candidates[i].v))};

    for (std::size_t size = 0; size <= std::min(k, m); ++size) {
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            UnionFind uf(n);
            bool forest = true;
            for (std::size_t i = 0; i < size && forest; ++i)
                forest = uf.unite(at[pick[i]].first, at[pick[i]].second);
            if (forest) {
                std::size_t blocks = 0;
                auto labels = uf.labels(blocks);
                if (in_class(contract_labels_graph(g, labels, blocks), target)) {
                    std::vector<Edge> chosen;
                    for (auto p : pick)
                        chosen.push_back(candidates[p]);
                    return chosen;
                }
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

} // namespace contractk::detail
