#include "graphfair/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphfair/errors.hpp"

namespace graphfair {

namespace {

const AdditiveValuation& require_additive(const Instance& inst, int agent) {
    const Valuation& v = inst.valuation(agent);
    if (const auto* add = std::get_if<AdditiveValuation>(&v)) return *add;
    throw NotAdditive("agent " + std::to_string(agent) + " is not additive");
}

void require_goods_only(const Instance& inst) {
    if (!inst.goods_only()) throw ChoresUnsupported();
}

// Items sorted by descending value with ascending-id ties.
std::vector<int> descending_items(const AdditiveValuation& v, const ItemSet& pool) {
    std::vector<int> items(pool.begin(), pool.end());
    std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
        return v.values[static_cast<std::size_t>(a)] > v.values[static_cast<std::size_t>(b)];
    });
    return items;
}

// Fills `bags` greedily under valuation v: each item goes to the currently
// minimum bag, first bag winning ties.
void greedy_bag_fill(const AdditiveValuation& v, const std::vector<int>& items_desc,
                     std::vector<ItemSet>& bags) {
    std::vector<Rational> totals(bags.size(), Rational(0));
    for (std::size_t b = 0; b < bags.size(); ++b) {
        for (int g : bags[b]) totals[b] += v.values[static_cast<std::size_t>(g)];
    }
    for (int g : items_desc) {
        std::size_t target = 0;
        for (std::size_t b = 1; b < bags.size(); ++b) {
            if (totals[b] < totals[target]) target = b;
        }
        bags[target].insert(g);
        totals[target] += v.values[static_cast<std::size_t>(g)];
    }
}

// First-found exhaustive assignment search for EFX over the given edges.
// Items are assigned in id order; the agent index is the fastest-moving
// digit, so the output is the lexicographically first surviving assignment
// vector. Optional prunes:
//  - canonical break between named agents with identical valuations (an item
//    may only start the first still-empty bundle of its class);
//  - a goods-only additive bound that abandons a branch once some edge's
//    strong envy provably cannot be repaired by the remaining items.
class EfxSearch {
  public:
    EfxSearch(const Instance& inst, std::vector<int> agents, std::vector<std::pair<int, int>> edges,
              bool symmetry_prune)
        : inst_(inst), agents_(std::move(agents)), edges_(std::move(edges)) {
        const std::size_t k = agents_.size();
        pos_of_.assign(static_cast<std::size_t>(inst.agent_count()), -1);
        for (std::size_t p = 0; p < k; ++p) pos_of_[static_cast<std::size_t>(agents_[p])] = static_cast<int>(p);
        for (auto [a, b] : edges_) {
            const int pa = pos_of_[static_cast<std::size_t>(a)];
            const int pb = pos_of_[static_cast<std::size_t>(b)];
            if (pa < 0 || pb < 0) {
                throw std::logic_error("search edge endpoint is not a named agent");
            }
            pos_edges_.emplace_back(pa, pb);
        }
        if (symmetry_prune) {
            sym_class_.assign(k, -1);
            int next = 0;
            for (std::size_t p = 0; p < k; ++p) {
                if (sym_class_[p] >= 0) continue;
                sym_class_[p] = next;
                for (std::size_t q = p + 1; q < k; ++q) {
                    if (sym_class_[q] < 0 && valuations_identical(inst_, agents_[p], agents_[q])) {
                        sym_class_[q] = next;
                    }
                }
                ++next;
            }
        }
        numeric_fast_path_ = true;
        for (int a : agents_) {
            if (!is_additive(inst_.valuation(a))) numeric_fast_path_ = false;
        }
    }

    std::optional<Allocation> run() {
        const std::size_t k = agents_.size();
        const int m = inst_.item_count();
        assign_.assign(static_cast<std::size_t>(m), -1);
        bundles_.assign(k, {});
        if (numeric_fast_path_) {
            vals_.assign(k, std::vector<Rational>(k, Rational(0)));
            suffix_.assign(k, std::vector<Rational>(static_cast<std::size_t>(m) + 1, Rational(0)));
            goods_prune_ = inst_.goods_only();
            for (std::size_t p = 0; p < k; ++p) {
                const auto& v = std::get<AdditiveValuation>(inst_.valuation(agents_[p])).values;
                for (int t = m - 1; t >= 0; --t) {
                    suffix_[p][static_cast<std::size_t>(t)] =
                        suffix_[p][static_cast<std::size_t>(t) + 1] + v[static_cast<std::size_t>(t)];
                }
            }
            if (recurse_fast(0)) return result_;
            return std::nullopt;
        }
        if (recurse_generic(0)) return result_;
        return std::nullopt;
    }

  private:
    bool symmetry_allows(std::size_t q) const {
        if (sym_class_.empty() || !bundles_[q].empty()) return true;
        for (std::size_t r = 0; r < q; ++r) {
            if (sym_class_[r] == sym_class_[q] && bundles_[r].empty()) return false;
        }
        return true;
    }

    Rational item_val(std::size_t p, int item) const {
        return std::get<AdditiveValuation>(inst_.valuation(agents_[p])).values[static_cast<std::size_t>(item)];
    }

    // Strong envy from position p toward position q under current bundles.
    bool strong_envy_fast(std::size_t p, std::size_t q) const {
        if (vals_[p][q] <= vals_[p][p]) return false;  // no envy, hence no strong envy
        bool first = true;
        Rational min_good(0);
        for (int g : bundles_[q]) {
            if (inst_.kind_of(g) != ItemKind::Good) continue;
            const Rational v = item_val(p, g);
            if (first || v < min_good) {
                min_good = v;
                first = false;
            }
        }
        if (!first && vals_[p][q] - min_good > vals_[p][p]) return true;
        // Removing the mildest chore helps the least, so it is the binding one.
        first = true;
        Rational max_chore(0);
        for (int c : bundles_[p]) {
            if (inst_.kind_of(c) != ItemKind::Chore) continue;
            const Rational v = item_val(p, c);
            if (first || v > max_chore) {
                max_chore = v;
                first = false;
            }
        }
        if (!first && vals_[p][q] > vals_[p][p] - max_chore) return true;
        return false;
    }

    // True when edge (p -> q) already has strong envy no suffix can repair.
    bool hopeless(std::size_t p, std::size_t q, int next_item) const {
        if (bundles_[q].empty()) return false;
        bool first = true;
        Rational min_good(0);
        for (int g : bundles_[q]) {
            const Rational v = item_val(p, g);
            if (first || v < min_good) {
                min_good = v;
                first = false;
            }
        }
        return vals_[p][q] - min_good > vals_[p][p] + suffix_[p][static_cast<std::size_t>(next_item)];
    }

    bool leaf_ok_fast() const {
        for (auto [pa, pb] : pos_edges_) {
            if (strong_envy_fast(static_cast<std::size_t>(pa), static_cast<std::size_t>(pb))) return false;
            if (strong_envy_fast(static_cast<std::size_t>(pb), static_cast<std::size_t>(pa))) return false;
        }
        return true;
    }

    bool recurse_fast(int t) {
        const std::size_t k = agents_.size();
        if (t == inst_.item_count()) {
            if (!leaf_ok_fast()) return false;
            materialize();
            return true;
        }
        for (std::size_t q = 0; q < k; ++q) {
            if (!symmetry_allows(q)) continue;
            assign_[static_cast<std::size_t>(t)] = static_cast<int>(q);
            bundles_[q].push_back(t);
            for (std::size_t p = 0; p < k; ++p) vals_[p][q] += item_val(p, t);
            bool pruned = false;
            if (goods_prune_) {
                for (auto [pa, pb] : pos_edges_) {
                    if (static_cast<std::size_t>(pb) == q && hopeless(static_cast<std::size_t>(pa), q, t + 1)) {
                        pruned = true;
                        break;
                    }
                    if (static_cast<std::size_t>(pa) == q && hopeless(static_cast<std::size_t>(pb), q, t + 1)) {
                        pruned = true;
                        break;
                    }
                }
            }
            if (!pruned && recurse_fast(t + 1)) return true;
            for (std::size_t p = 0; p < k; ++p) vals_[p][q] -= item_val(p, t);
            bundles_[q].pop_back();
            assign_[static_cast<std::size_t>(t)] = -1;
        }
        return false;
    }

    bool recurse_generic(int t) {
        const std::size_t k = agents_.size();
        if (t == inst_.item_count()) {
            Allocation x = current_allocation();
            for (auto [a, b] : edges_) {
                if (strongly_envies(inst_, x, a, b) || strongly_envies(inst_, x, b, a)) return false;
            }
            result_ = std::move(x);
            return true;
        }
        for (std::size_t q = 0; q < k; ++q) {
            if (!symmetry_allows(q)) continue;
            bundles_[q].push_back(t);
            if (recurse_generic(t + 1)) return true;
            bundles_[q].pop_back();
        }
        return false;
    }

    Allocation current_allocation() const {
        Allocation x = Allocation::empty(inst_.agent_count());
        for (std::size_t q = 0; q < agents_.size(); ++q) {
            x.bundles[static_cast<std::size_t>(agents_[q])].insert(bundles_[q].begin(), bundles_[q].end());
        }
        return x;
    }

    void materialize() { result_ = current_allocation(); }

    const Instance& inst_;
    std::vector<int> agents_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> pos_edges_;
    std::vector<int> pos_of_;
    std::vector<int> sym_class_;
    bool numeric_fast_path_ = false;
    bool goods_prune_ = false;
    std::vector<int> assign_;
    std::vector<std::vector<int>> bundles_;
    std::vector<std::vector<Rational>> vals_;
    std::vector<std::vector<Rational>> suffix_;
    std::optional<Allocation> result_;
};

std::vector<std::pair<int, int>> complete_edges(const std::vector<int>& agents) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < agents.size(); ++i) {
        for (std::size_t j = i + 1; j < agents.size(); ++j) edges.emplace_back(agents[i], agents[j]);
    }
    return edges;
}

void verify_pairwise_efx_or_throw(const Instance& inst, const Allocation& x, const std::vector<int>& agents,
                                  const char* what) {
    for (std::size_t i = 0; i < agents.size(); ++i) {
        for (std::size_t j = 0; j < agents.size(); ++j) {
            if (i == j) continue;
            if (strongly_envies(inst, x, agents[i], agents[j])) {
                throw std::logic_error(std::string(what) + ": constructed allocation failed verification");
            }
        }
    }
}

void check_named_agents(const Instance& inst, const std::vector<int>& agents) {
    if (agents.empty()) throw BadSize("need at least one named agent");
    std::vector<bool> seen(static_cast<std::size_t>(inst.agent_count()), false);
    for (int a : agents) {
        if (a < 0 || a >= inst.agent_count()) throw BadSize("agent id " + std::to_string(a) + " out of range");
        if (seen[static_cast<std::size_t>(a)]) throw BadSize("agent " + std::to_string(a) + " named twice");
        seen[static_cast<std::size_t>(a)] = true;
    }
}

}  // namespace

std::pair<ItemSet, ItemSet> local_efx(const Instance& inst, int cutter, int chooser, const ItemSet& a,
                                      const ItemSet& b) {
    require_goods_only(inst);
    const AdditiveValuation& vc = require_additive(inst, cutter);
    const AdditiveValuation& vh = require_additive(inst, chooser);
    ItemSet pool = a;
    pool.insert(b.begin(), b.end());
    std::vector<ItemSet> bags(2);
    greedy_bag_fill(vc, descending_items(vc, pool), bags);
    Rational h0(0), h1(0);
    for (int g : bags[0]) h0 += vh.values[static_cast<std::size_t>(g)];
    for (int g : bags[1]) h1 += vh.values[static_cast<std::size_t>(g)];
    const std::size_t chosen = h1 > h0 ? 1 : 0;  // first bag wins ties
    ItemSet chooser_bag = bags[chosen];
    ItemSet cutter_bag = bags[1 - chosen];
    // Cut-and-choose guarantees EFX both ways here; anything else is a bug.
    Allocation pair = Allocation::empty(inst.agent_count());
    pair.bundles[static_cast<std::size_t>(cutter)] = cutter_bag;
    pair.bundles[static_cast<std::size_t>(chooser)] = chooser_bag;
    if (strongly_envies(inst, pair, cutter, chooser) || strongly_envies(inst, pair, chooser, cutter)) {
        throw std::logic_error("local_efx: cut failed verification");
    }
    return {std::move(cutter_bag), std::move(chooser_bag)};
}

Allocation efx_identical_additive(const Instance& inst, const std::vector<int>& agents) {
    check_named_agents(inst, agents);
    require_goods_only(inst);
    const AdditiveValuation& v = require_additive(inst, agents[0]);
    for (int a : agents) {
        require_additive(inst, a);
        if (!valuations_identical(inst, agents[0], a)) {
            throw NotConsistent("agents " + std::to_string(agents[0]) + " and " + std::to_string(a) +
                                " differ; identical valuations required");
        }
    }
    ItemSet all;
    for (int g = 0; g < inst.item_count(); ++g) all.insert(g);
    std::vector<ItemSet> bags(agents.size());
    greedy_bag_fill(v, descending_items(v, all), bags);
    Allocation x = Allocation::empty(inst.agent_count());
    for (std::size_t i = 0; i < agents.size(); ++i) x.bundles[static_cast<std::size_t>(agents[i])] = bags[i];
    verify_pairwise_efx_or_throw(inst, x, agents, "efx_identical_additive");
    return x;
}

Allocation efx_consistent_additive(const Instance& inst, const std::vector<int>& agents) {
    check_named_agents(inst, agents);
    require_goods_only(inst);
    if (!are_consistent(inst, agents)) {
        throw NotConsistent("named agents hold opposing strict preferences");
    }
    const bool identical = std::all_of(agents.begin(), agents.end(),
                                       [&](int a) { return valuations_identical(inst, agents[0], a); });
    if (identical) return efx_identical_additive(inst, agents);
    EfxSearch search(inst, agents, complete_edges(agents), /*symmetry_prune=*/true);
    auto found = search.run();
    if (!found) throw SearchExhausted("no complete-graph EFX allocation found for consistent agents");
    verify_pairwise_efx_or_throw(inst, *found, agents, "efx_consistent_additive");
    return *found;
}

Allocation efx_two_types(const Instance& inst, const std::vector<int>& agents) {
    check_named_agents(inst, agents);
    require_goods_only(inst);
    std::vector<int> reps;
    for (int a : agents) {
        if (!is_numeric(inst.valuation(a))) throw LexicographicNotNumeric();
        bool known = std::any_of(reps.begin(), reps.end(),
                                 [&](int r) { return valuations_identical(inst, r, a); });
        if (!known) reps.push_back(a);
    }
    if (reps.size() > 2) {
        throw BadSize("named agents hold " + std::to_string(reps.size()) + " distinct valuations, at most 2 allowed");
    }
    EfxSearch search(inst, agents, complete_edges(agents), /*symmetry_prune=*/true);
    auto found = search.run();
    if (!found) throw SearchExhausted("no complete-graph EFX allocation found for two-type agents");
    verify_pairwise_efx_or_throw(inst, *found, agents, "efx_two_types");
    return *found;
}

Allocation efx_consistent_chores(const Instance& inst, const std::vector<int>& agents) {
    check_named_agents(inst, agents);
    if (!inst.chores_only()) throw BadSize("chores-only instance required");
    for (int a : agents) require_additive(inst, a);
    if (!are_consistent(inst, agents)) {
        throw NotConsistent("named agents hold opposing strict preferences");
    }
    EfxSearch search(inst, agents, complete_edges(agents), /*symmetry_prune=*/true);
    auto found = search.run();
    if (!found) throw SearchExhausted("no complete-graph EFX allocation found for consistent chores agents");
    verify_pairwise_efx_or_throw(inst, *found, agents, "efx_consistent_chores");
    return *found;
}

std::optional<Allocation> brute_force_efx_search(const Instance& inst, const Graph& g, std::uint64_t budget) {
    const int n = inst.agent_count();
    const int m = inst.item_count();
    long double states = 1;
    for (int t = 0; t < m; ++t) states *= n;
    if (states > static_cast<long double>(budget)) {
        throw BudgetExceeded("enumeration needs ~" + std::to_string(static_cast<double>(states)) +
                             " states, budget is " + std::to_string(budget));
    }
    std::vector<int> agents(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) agents[static_cast<std::size_t>(a)] = a;
    // No symmetry pruning: an arbitrary edge set does not permit swapping
    // identical agents, and a NotFound answer must cover the full space.
    EfxSearch search(inst, agents, g.edges(), /*symmetry_prune=*/false);
    auto found = search.run();
    if (found && !is_g_efx(inst, *found, g)) {
        throw std::logic_error("brute_force_efx_search: found allocation failed re-verification");
    }
    return found;
}

}  // namespace graphfair
