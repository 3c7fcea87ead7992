#include "graphfair/hef.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphfair/errors.hpp"

namespace graphfair {

namespace {

void require_additive_goods(const Instance& inst) {
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (!inst.all_additive()) throw NotAdditive();
}

// Highest-valued item in the pool for this agent, lowest id on ties.
int argmax_item(const Instance& inst, int agent, const ItemSet& pool) {
    int best = -1;
    Rational best_val(0);
    for (int g : pool) {
        const Rational v = inst.item_value(agent, g);
        if (best < 0 || v > best_val) {
            best = g;
            best_val = v;
        }
    }
    return best;
}

}  // namespace

VcrrResult vertex_cover_round_robin(const Instance& inst, const Graph& g, const std::vector<int>& component,
                                    const std::vector<int>& cover) {
    require_additive_goods(inst);
    if (g.vertex_count() != inst.agent_count()) {
        throw BadSize("graph has " + std::to_string(g.vertex_count()) + " vertices for " +
                      std::to_string(inst.agent_count()) + " agents");
    }
    std::vector<int> comp = component;
    std::sort(comp.begin(), comp.end());
    const auto comps = connected_components(g);
    if (std::find(comps.begin(), comps.end(), comp) == comps.end()) {
        throw BadSize("given vertex set is not a connected component of the graph");
    }
    std::vector<bool> in_comp(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : comp) in_comp[static_cast<std::size_t>(v)] = true;
    for (int v : cover) {
        if (v < 0 || v >= g.vertex_count() || !in_comp[static_cast<std::size_t>(v)]) {
            throw NotACover("cover member " + std::to_string(v) + " is outside the component");
        }
    }
    if (!is_vertex_cover(g, comp, cover)) {
        throw NotACover("given set does not cover every edge of the component");
    }

    std::vector<int> order(cover.begin(), cover.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    const std::size_t cover_count = order.size();
    for (int v : comp) {
        if (std::find(order.begin(), order.begin() + static_cast<long>(cover_count), v) ==
            order.begin() + static_cast<long>(cover_count)) {
            order.push_back(v);
        }
    }

    ItemSet unallocated;
    for (int g2 = 0; g2 < inst.item_count(); ++g2) unallocated.insert(g2);
    VcrrResult result;
    result.allocation = Allocation::empty(inst.agent_count());
    result.picks.assign(static_cast<std::size_t>(inst.agent_count()), {});
    while (!unallocated.empty()) {
        for (std::size_t i = 0; i < order.size() && !unallocated.empty(); ++i) {
            const int agent = order[i];
            const int pick = argmax_item(inst, agent, unallocated);
            unallocated.erase(pick);
            result.allocation.bundles[static_cast<std::size_t>(agent)].insert(pick);
            result.picks[static_cast<std::size_t>(agent)].push_back(pick);
            if (i < cover_count && result.picks[static_cast<std::size_t>(agent)].size() == 1) {
                result.hidden.items.insert(pick);
            }
        }
    }

    if (result.hidden.items.size() > cover_count) {
        throw std::logic_error("vertex_cover_round_robin: hidden set exceeds the cover size");
    }
    if (!is_g_hef(inst, result.allocation, g, result.hidden, /*uniform=*/true)) {
        throw std::logic_error("vertex_cover_round_robin: output failed hidden envy-freeness verification");
    }
    return result;
}

Allocation picking_sequence(const Instance& inst, const std::vector<int>& order) {
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (!inst.all_numeric()) throw LexicographicNotNumeric();
    if (static_cast<int>(order.size()) < inst.item_count()) {
        throw OrderTooShort("order has " + std::to_string(order.size()) + " turns for " +
                            std::to_string(inst.item_count()) + " goods");
    }
    for (int a : order) {
        if (a < 0 || a >= inst.agent_count()) throw BadSize("agent id " + std::to_string(a) + " out of range");
    }
    ItemSet unallocated;
    for (int g = 0; g < inst.item_count(); ++g) unallocated.insert(g);
    Allocation x = Allocation::empty(inst.agent_count());
    for (int a : order) {
        if (unallocated.empty()) break;
        const int pick = argmax_item(inst, a, unallocated);
        unallocated.erase(pick);
        x.bundles[static_cast<std::size_t>(a)].insert(pick);
    }
    return x;
}

StarBridgeCliqueRun star_bridge_clique_protocol(const Instance& inst) {
    require_additive_goods(inst);
    const int n = inst.agent_count();
    if (n < 3) throw BadSize("protocol needs at least 3 agents");
    if (inst.item_count() != n) {
        throw BadSize("protocol needs exactly as many goods as agents, got " + std::to_string(inst.item_count()));
    }
    StarBridgeCliqueRun run;
    run.graph = make_star_bridge_clique(n);
    const int star_half = (n - 1 + 1) / 2;  // ceil((n-1)/2)
    const int bridge = star_half;
    // Star side picks, bridge picks once, star side picks again. Clique
    // vertices never pick and end up empty.
    std::vector<int> order;
    for (int v = 0; v < star_half; ++v) order.push_back(v);
    order.push_back(bridge);
    for (int v = 0; v < (n - 1) / 2; ++v) order.push_back(v);

    ItemSet unallocated;
    for (int g = 0; g < n; ++g) unallocated.insert(g);
    run.allocation = Allocation::empty(n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int agent = order[i];
        const int pick = argmax_item(inst, agent, unallocated);
        unallocated.erase(pick);
        run.allocation.bundles[static_cast<std::size_t>(agent)].insert(pick);
        if (i == 0 || agent == bridge) run.hidden.items.insert(pick);
    }
    if (!unallocated.empty()) throw std::logic_error("star_bridge_clique_protocol: picking order too short");
    if (run.hidden.items.size() != 2) {
        throw std::logic_error("star_bridge_clique_protocol: expected exactly two hidden goods");
    }
    if (!is_g_hef(inst, run.allocation, run.graph, run.hidden, /*uniform=*/true)) {
        throw std::logic_error("star_bridge_clique_protocol: output failed verification");
    }
    return run;
}

std::optional<HiddenSet> min_hidden_set(const Instance& inst, const Allocation& x, const Graph& g, bool uniform,
                                        int max_m) {
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (inst.item_count() > max_m) {
        throw TooLarge("hidden-set search limited to " + std::to_string(max_m) + " items, got " +
                       std::to_string(inst.item_count()));
    }
    // Hiding can only help on envied bundles, so restrict candidates to them.
    std::set<int> candidate_set;
    for (auto [a, b] : g.edges()) {
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            if (envy_amount(inst, x, i, j) > 0) {
                const auto& bundle = x.bundles[static_cast<std::size_t>(j)];
                candidate_set.insert(bundle.begin(), bundle.end());
            }
        }
    }
    const std::vector<int> candidates(candidate_set.begin(), candidate_set.end());
    const int c = static_cast<int>(candidates.size());
    for (int size = 0; size <= c; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            HiddenSet s;
            for (int idx : pick) s.items.insert(candidates[static_cast<std::size_t>(idx)]);
            if (is_g_hef(inst, x, g, s, uniform)) return s;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == c - size + i) --i;
            if (i < 0) break;
            pick[static_cast<std::size_t>(i)] += 1;
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    if (!uniform) {
        // Hiding every candidate empties each envied bundle, which must pass.
        throw std::logic_error("min_hidden_set: full candidate set failed");
    }
    return std::nullopt;  // per-bundle cap of one hidden item can be infeasible
}

Rational lower_bound_item_value(int item_id) {
    Rational half_power(1);
    half_power /= BigInt(1) << (item_id + 1);
    return Rational(1) + half_power;
}

Instance gen_lower_bound_instance(const Graph& g, int scale) {
    const int n = g.vertex_count();
    if (n < 1) throw BadSize("graph needs at least one vertex");
    long long m = scale;
    if (scale < 0) m = static_cast<long long>(n) * n * n;
    if (m < 1) throw BadSize("scale must be positive");
    std::vector<Item> items;
    AdditiveValuation v;
    for (int j = 0; j < m; ++j) {
        items.push_back({j, ItemKind::Good});
        v.values.push_back(lower_bound_item_value(j));
    }
    std::vector<Valuation> vals(static_cast<std::size_t>(n), v);
    return Instance::create(std::move(items), std::move(vals));
}

}  // namespace graphfair
