#ifndef GRAPHFAIR_ENVY_HPP
#define GRAPHFAIR_ENVY_HPP

#include <vector>

#include "graphfair/graph.hpp"
#include "graphfair/model.hpp"

namespace graphfair {

// Numeric value of a bundle. Throws LexicographicNotNumeric for ordinal agents.
Rational bundle_value(const Instance& inst, int agent, const ItemSet& bundle);

// Strict preference between bundles. Numeric agents compare values; ordinal
// agents walk their priority list: the highest-priority item present in
// exactly one bundle decides (a good pulls toward the bundle holding it, a
// chore pushes away). Equal bundles are never preferred.
bool prefers(const Instance& inst, int agent, const ItemSet& a, const ItemSet& b);

// max(v_i(X_j) - v_i(X_i), 0).
Rational envy_amount(const Instance& inst, const Allocation& x, int i, int j);

// Margin by which the envy survives the most favorable single-item fix:
// dropping i's best choice of a good from X_j, or of a chore from X_i.
// Both branches clamp at zero; the result is their max.
Rational strong_envy_amount(const Instance& inst, const Allocation& x, int i, int j);

// Preference-based strong envy; the only form available to ordinal agents.
// For numeric agents it agrees with strong_envy_amount(...) > 0.
bool strongly_envies(const Instance& inst, const Allocation& x, int i, int j);

// No strong envy in either direction across any edge of g.
bool is_g_efx(const Instance& inst, const Allocation& x, const Graph& g);

// Every edge (i,j), both directions, satisfies v_i(X_i) >= v_i(X_j \ S).
// With uniform=true additionally no bundle loses more than one item to S.
// Goods-only; chores raise ChoresUnsupported.
bool is_g_hef(const Instance& inst, const Allocation& x, const Graph& g, const HiddenSet& s, bool uniform);

// True when no two named agents hold opposing strict single-item preferences,
// i.e. whenever one strictly values good a over good b every other agent
// weakly does too. Additive only.
bool are_consistent(const Instance& inst, const std::vector<int>& agents);

bool valuations_identical(const Instance& inst, int a, int b);

// Pairwise envy/strong-envy magnitudes, optionally restricted to graph edges
// (non-edges stay zero). Diagonal is zero.
struct EnvyReport {
    std::vector<std::vector<Rational>> envy;
    std::vector<std::vector<Rational>> strong;
};

EnvyReport envy_report(const Instance& inst, const Allocation& x, const Graph* g = nullptr);

}  // namespace graphfair

#endif  // GRAPHFAIR_ENVY_HPP
