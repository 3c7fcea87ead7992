#include "graphfair/envy.hpp"

#include <algorithm>

#include "graphfair/errors.hpp"

namespace graphfair {

namespace {

std::size_t bundle_mask(const ItemSet& bundle) {
    std::size_t mask = 0;
    for (int g : bundle) mask |= std::size_t{1} << g;
    return mask;
}

}  // namespace

Rational bundle_value(const Instance& inst, int agent, const ItemSet& bundle) {
    const Valuation& v = inst.valuation(agent);
    if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
        Rational total = 0;
        for (int g : bundle) total += add->values[static_cast<std::size_t>(g)];
        return total;
    }
    if (const auto* tab = std::get_if<TableValuation>(&v)) {
        return tab->by_subset[bundle_mask(bundle)];
    }
    throw LexicographicNotNumeric();
}

bool prefers(const Instance& inst, int agent, const ItemSet& a, const ItemSet& b) {
    const Valuation& v = inst.valuation(agent);
    if (const auto* lex = std::get_if<LexicographicValuation>(&v)) {
        for (int item : lex->priority) {
            const bool in_a = a.count(item) > 0;
            const bool in_b = b.count(item) > 0;
            if (in_a == in_b) continue;
            if (inst.kind_of(item) == ItemKind::Good) return in_a;
            return in_b;  // chore: prefer the bundle without it
        }
        return false;
    }
    return bundle_value(inst, agent, a) > bundle_value(inst, agent, b);
}

Rational envy_amount(const Instance& inst, const Allocation& x, int i, int j) {
    const Rational own = bundle_value(inst, i, x.bundles[static_cast<std::size_t>(i)]);
    const Rational other = bundle_value(inst, i, x.bundles[static_cast<std::size_t>(j)]);
    return other > own ? other - own : Rational(0);
}

Rational strong_envy_amount(const Instance& inst, const Allocation& x, int i, int j) {
    const ItemSet& mine = x.bundles[static_cast<std::size_t>(i)];
    const ItemSet& theirs = x.bundles[static_cast<std::size_t>(j)];
    const Rational own = bundle_value(inst, i, mine);
    Rational best(0);
    for (int g : theirs) {
        if (inst.kind_of(g) != ItemKind::Good) continue;
        ItemSet reduced = theirs;
        reduced.erase(g);
        const Rational margin = bundle_value(inst, i, reduced) - own;
        best = std::max(best, margin);
    }
    const Rational other = bundle_value(inst, i, theirs);
    for (int c : mine) {
        if (inst.kind_of(c) != ItemKind::Chore) continue;
        ItemSet reduced = mine;
        reduced.erase(c);
        const Rational margin = other - bundle_value(inst, i, reduced);
        best = std::max(best, margin);
    }
    return best;
}

bool strongly_envies(const Instance& inst, const Allocation& x, int i, int j) {
    const ItemSet& mine = x.bundles[static_cast<std::size_t>(i)];
    const ItemSet& theirs = x.bundles[static_cast<std::size_t>(j)];
    for (int g : theirs) {
        if (inst.kind_of(g) != ItemKind::Good) continue;
        ItemSet reduced = theirs;
        reduced.erase(g);
        if (prefers(inst, i, reduced, mine)) return true;
    }
    for (int c : mine) {
        if (inst.kind_of(c) != ItemKind::Chore) continue;
        ItemSet reduced = mine;
        reduced.erase(c);
        if (prefers(inst, i, theirs, reduced)) return true;
    }
    return false;
}

bool is_g_efx(const Instance& inst, const Allocation& x, const Graph& g) {
    for (auto [a, b] : g.edges()) {
        if (strongly_envies(inst, x, a, b) || strongly_envies(inst, x, b, a)) return false;
    }
    return true;
}

bool is_g_hef(const Instance& inst, const Allocation& x, const Graph& g, const HiddenSet& s, bool uniform) {
    if (!inst.goods_only()) throw ChoresUnsupported("hidden envy-freeness is defined for goods only");
    if (uniform) {
        for (const ItemSet& bundle : x.bundles) {
            int hit = 0;
            for (int item : s.items) hit += bundle.count(item) > 0 ? 1 : 0;
            if (hit > 1) return false;
        }
    }
    auto holds = [&](int i, int j) {
        ItemSet visible = x.bundles[static_cast<std::size_t>(j)];
        for (int item : s.items) visible.erase(item);
        return bundle_value(inst, i, x.bundles[static_cast<std::size_t>(i)]) >= bundle_value(inst, i, visible);
    };
    for (auto [a, b] : g.edges()) {
        if (!holds(a, b) || !holds(b, a)) return false;
    }
    return true;
}

bool are_consistent(const Instance& inst, const std::vector<int>& agents) {
    const int m = inst.item_count();
    for (int a : agents) {
        if (!is_additive(inst.valuation(a))) {
            throw NotAdditive("consistency check requires additive valuations (agent " + std::to_string(a) + ")");
        }
    }
    for (std::size_t p = 0; p < agents.size(); ++p) {
        const auto& va = std::get<AdditiveValuation>(inst.valuation(agents[p])).values;
        for (std::size_t q = p + 1; q < agents.size(); ++q) {
            const auto& vb = std::get<AdditiveValuation>(inst.valuation(agents[q])).values;
            for (int k = 0; k < m; ++k) {
                for (int l = 0; l < m; ++l) {
                    if (va[static_cast<std::size_t>(k)] > va[static_cast<std::size_t>(l)] &&
                        vb[static_cast<std::size_t>(k)] < vb[static_cast<std::size_t>(l)]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool valuations_identical(const Instance& inst, int a, int b) {
    return inst.valuation(a) == inst.valuation(b);
}

EnvyReport envy_report(const Instance& inst, const Allocation& x, const Graph* g) {
    const int n = inst.agent_count();
    EnvyReport rep;
    rep.envy.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    rep.strong.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (g != nullptr && !g->has_edge(i, j)) continue;
            rep.envy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = envy_amount(inst, x, i, j);
            rep.strong[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                strong_envy_amount(inst, x, i, j);
        }
    }
    return rep;
}

}  // namespace graphfair
