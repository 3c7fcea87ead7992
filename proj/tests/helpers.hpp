#ifndef GRAPHFAIR_TESTS_HELPERS_HPP
#define GRAPHFAIR_TESTS_HELPERS_HPP

#include <functional>
#include <vector>

#include "graphfair/envy.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/model.hpp"

namespace graphfair::testing {

inline Instance goods_instance(const std::vector<std::vector<long>>& vals) {
    std::vector<Item> items;
    for (int g = 0; g < static_cast<int>(vals.at(0).size()); ++g) items.push_back({g, ItemKind::Good});
    std::vector<Valuation> vs;
    for (const auto& row : vals) {
        AdditiveValuation add;
        for (long v : row) add.values.emplace_back(v);
        vs.emplace_back(std::move(add));
    }
    return Instance::create(std::move(items), std::move(vs));
}

inline Instance chores_instance(const std::vector<std::vector<long>>& vals) {
    std::vector<Item> items;
    for (int g = 0; g < static_cast<int>(vals.at(0).size()); ++g) items.push_back({g, ItemKind::Chore});
    std::vector<Valuation> vs;
    for (const auto& row : vals) {
        AdditiveValuation add;
        for (long v : row) add.values.emplace_back(v);
        vs.emplace_back(std::move(add));
    }
    return Instance::create(std::move(items), std::move(vs));
}

inline Instance mixed_instance(const std::vector<ItemKind>& kinds, const std::vector<std::vector<long>>& vals) {
    std::vector<Item> items;
    for (int g = 0; g < static_cast<int>(kinds.size()); ++g) items.push_back({g, kinds[g]});
    std::vector<Valuation> vs;
    for (const auto& row : vals) {
        AdditiveValuation add;
        for (long v : row) add.values.emplace_back(v);
        vs.emplace_back(std::move(add));
    }
    return Instance::create(std::move(items), std::move(vs));
}

inline Instance lex_instance(const std::vector<ItemKind>& kinds, const std::vector<std::vector<int>>& priorities) {
    std::vector<Item> items;
    for (int g = 0; g < static_cast<int>(kinds.size()); ++g) items.push_back({g, kinds[g]});
    std::vector<Valuation> vs;
    for (const auto& p : priorities) vs.emplace_back(LexicographicValuation{p});
    return Instance::create(std::move(items), std::move(vs));
}

inline Allocation alloc(const std::vector<std::vector<int>>& bundles) {
    Allocation x = Allocation::empty(static_cast<int>(bundles.size()));
    for (std::size_t i = 0; i < bundles.size(); ++i) x.bundles[i] = ItemSet(bundles[i].begin(), bundles[i].end());
    return x;
}

// Hand-checked three agents, six goods, swept on the path 0-1-2. Used as the
// shared regression instance across the construction tests.
inline Instance three_agent_path_fixture() {
    return goods_instance({{9, 1, 0, 0, 0, 0}, {8, 0, 0, 0, 0, 2}, {2, 2, 2, 1, 2, 1}});
}

// Three agents whose sweep behavior depends on who cuts; the cutter choice on
// the middle edge decides whether one round suffices.
inline Instance sweep_regression_fixture() {
    return goods_instance({{120, 200, 80, 120, 400, 80}, {39, 39, 38, 77, 769, 38}, {994, 1, 1, 1, 2, 1}});
}

// Definition-level reimplementation of strong envy for additive agents, kept
// deliberately naive so library results can be cross-checked against it.
inline bool oracle_strong_envy(const Instance& inst, const Allocation& x, int i, int j) {
    const auto& vi = std::get<AdditiveValuation>(inst.valuation(i)).values;
    auto value = [&](const ItemSet& s) {
        Rational total = 0;
        for (int g : s) total += vi[static_cast<std::size_t>(g)];
        return total;
    };
    const Rational own = value(x.bundles[static_cast<std::size_t>(i)]);
    const Rational other = value(x.bundles[static_cast<std::size_t>(j)]);
    for (int g : x.bundles[static_cast<std::size_t>(j)]) {
        if (inst.kind_of(g) != ItemKind::Good) continue;
        ItemSet reduced = x.bundles[static_cast<std::size_t>(j)];
        reduced.erase(g);
        if (value(reduced) > own) return true;
    }
    for (int c : x.bundles[static_cast<std::size_t>(i)]) {
        if (inst.kind_of(c) != ItemKind::Chore) continue;
        ItemSet reduced = x.bundles[static_cast<std::size_t>(i)];
        reduced.erase(c);
        if (other > value(reduced)) return true;
    }
    return false;
}

inline bool oracle_is_g_efx(const Instance& inst, const Allocation& x, const Graph& g) {
    for (auto [a, b] : g.edges()) {
        if (oracle_strong_envy(inst, x, a, b) || oracle_strong_envy(inst, x, b, a)) return false;
    }
    return true;
}

// Visits every way to hand m items to n agents, in the same order the
// library's search uses: the owner vector (item 0 first) counts up
// lexicographically, so the last item's owner moves fastest.
inline void for_each_allocation(int n, int m, const std::function<void(const Allocation&)>& fn) {
    std::vector<int> owner(static_cast<std::size_t>(m), 0);
    while (true) {
        Allocation x = Allocation::empty(n);
        for (int g = 0; g < m; ++g) x.bundles[static_cast<std::size_t>(owner[static_cast<std::size_t>(g)])].insert(g);
        fn(x);
        int g = m - 1;
        while (g >= 0 && owner[static_cast<std::size_t>(g)] == n - 1) {
            owner[static_cast<std::size_t>(g)] = 0;
            --g;
        }
        if (g < 0) break;
        ++owner[static_cast<std::size_t>(g)];
    }
}

}  // namespace graphfair::testing

#endif  // GRAPHFAIR_TESTS_HELPERS_HPP
