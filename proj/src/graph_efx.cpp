#include "graphfair/graph_efx.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "graphfair/errors.hpp"
#include "graphfair/solvers.hpp"

namespace graphfair {

namespace {

std::vector<int> all_agents(const Instance& inst) {
    std::vector<int> agents(static_cast<std::size_t>(inst.agent_count()));
    for (int a = 0; a < inst.agent_count(); ++a) agents[static_cast<std::size_t>(a)] = a;
    return agents;
}

// n bundles that are mutually EFX under a single valuation: greedy for
// additive goods, search otherwise (identical tables, chores).
std::vector<ItemSet> identical_bundles(const Instance& inst, const Valuation& v, int count) {
    std::vector<Valuation> proxy(static_cast<std::size_t>(count), v);
    Instance proxy_inst = Instance::create(inst.items(), std::move(proxy));
    Allocation x;
    if (is_additive(v) && inst.goods_only()) {
        x = efx_identical_additive(proxy_inst, all_agents(proxy_inst));
    } else if (proxy_inst.goods_only()) {
        x = efx_two_types(proxy_inst, all_agents(proxy_inst));
    } else {
        x = efx_consistent_chores(proxy_inst, all_agents(proxy_inst));
    }
    return x.bundles;
}

// Strictly-preferred-or-first pick: scans bundles in index order and keeps
// the first maximal one under the agent's preference.
std::size_t pick_best_bundle(const Instance& inst, int agent, const std::vector<ItemSet>& bundles,
                             const std::vector<bool>& taken) {
    std::size_t best = bundles.size();
    for (std::size_t b = 0; b < bundles.size(); ++b) {
        if (taken[b]) continue;
        if (best == bundles.size() || prefers(inst, agent, bundles[b], bundles[best])) best = b;
    }
    if (best == bundles.size()) throw std::logic_error("no bundle left to pick");
    return best;
}

void verify_on_graph(const Instance& inst, const Allocation& x, const Graph& g, const char* what) {
    if (!x.is_partition_of(inst.item_count())) {
        throw std::logic_error(std::string(what) + ": output is not a complete partition");
    }
    if (!is_g_efx(inst, x, g)) {
        throw std::logic_error(std::string(what) + ": output failed graph EFX verification");
    }
}

void require_agent_graph(const Instance& inst, const Graph& g) {
    if (g.vertex_count() != inst.agent_count()) {
        throw BadSize("graph has " + std::to_string(g.vertex_count()) + " vertices for " +
                      std::to_string(inst.agent_count()) + " agents");
    }
}

// Shared outer-first / core-leftovers redistribution over per-agent pools.
// bundle i was built for the proxy valuation of agent i, so it belongs to
// that agent's pool. Outer agents pick their favorite bundle within their
// pool in ascending id order; each pool's leftovers go to its core group.
Allocation redistribute_by_pools(const Instance& inst, const CoreStructure& s, const std::vector<int>& pool_of_agent,
                                 const std::vector<ItemSet>& bundles,
                                 const std::optional<unsigned>& shuffle_seed) {
    const int n = inst.agent_count();
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    Allocation x = Allocation::empty(n);
    for (int o : s.outer) {
        std::size_t best = bundles.size();
        for (std::size_t b = 0; b < bundles.size(); ++b) {
            if (taken[b] || pool_of_agent[b] != pool_of_agent[static_cast<std::size_t>(o)]) continue;
            if (best == bundles.size() || prefers(inst, o, bundles[b], bundles[best])) best = b;
        }
        if (best == bundles.size()) throw std::logic_error("pool ran out of bundles for an outer agent");
        taken[best] = true;
        x.bundles[static_cast<std::size_t>(o)] = bundles[best];
    }
    for (std::size_t k = 0; k < s.core_groups.size(); ++k) {
        std::vector<std::size_t> left;
        for (std::size_t b = 0; b < bundles.size(); ++b) {
            if (!taken[b] && pool_of_agent[b] == static_cast<int>(k)) left.push_back(b);
        }
        if (left.size() != s.core_groups[k].size()) {
            throw std::logic_error("pool leftover count does not match its core group");
        }
        if (shuffle_seed) {
            std::mt19937 rng(*shuffle_seed + static_cast<unsigned>(k));
            std::shuffle(left.begin(), left.end(), rng);
        }
        for (std::size_t i = 0; i < left.size(); ++i) {
            taken[left[i]] = true;
            x.bundles[static_cast<std::size_t>(s.core_groups[k][i])] = bundles[left[i]];
        }
    }
    return x;
}

// Pool index per agent: core agents use their group, outer agents their
// neighbor group (with optional overrides).
std::vector<int> agent_pools(const Graph& g, const CoreStructure& s, const std::map<int, int>& overrides) {
    std::vector<int> pool(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t k = 0; k < s.core_groups.size(); ++k) {
        for (int a : s.core_groups[k]) pool[static_cast<std::size_t>(a)] = static_cast<int>(k);
    }
    const std::vector<int> outer = outer_pools(g, s);
    for (std::size_t i = 0; i < s.outer.size(); ++i) pool[static_cast<std::size_t>(s.outer[i])] = outer[i];
    for (auto [agent, k] : overrides) {
        if (agent < 0 || agent >= g.vertex_count() || k < 0 || k >= static_cast<int>(s.core_groups.size())) {
            throw BadSize("bad pool override for agent " + std::to_string(agent));
        }
        pool[static_cast<std::size_t>(agent)] = k;
    }
    return pool;
}

std::vector<Valuation> proxy_valuations(const Instance& inst, const CoreStructure& s,
                                        const std::vector<int>& pool_of_agent) {
    std::vector<Valuation> vals(inst.valuations());
    for (int o : s.outer) {
        const int rep = s.core_groups[static_cast<std::size_t>(pool_of_agent[static_cast<std::size_t>(o)])][0];
        vals[static_cast<std::size_t>(o)] = inst.valuation(rep);
    }
    return vals;
}

}  // namespace

Allocation star_efx(const Instance& inst, const Graph& g, int center) {
    require_agent_graph(inst, g);
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (center < 0 || center >= inst.agent_count()) throw BadSize("center out of range");
    for (auto [a, b] : g.edges()) {
        if (a != center && b != center) {
            throw ShapeMismatch("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") does not touch the center");
        }
    }
    if (!is_numeric(inst.valuation(center))) throw LexicographicNotNumeric();

    const std::vector<ItemSet> bundles = identical_bundles(inst, inst.valuation(center), inst.agent_count());
    std::vector<bool> taken(bundles.size(), false);
    Allocation x = Allocation::empty(inst.agent_count());
    for (int a = 0; a < inst.agent_count(); ++a) {
        if (a == center) continue;
        const std::size_t b = pick_best_bundle(inst, a, bundles, taken);
        taken[b] = true;
        x.bundles[static_cast<std::size_t>(a)] = bundles[b];
    }
    for (std::size_t b = 0; b < bundles.size(); ++b) {
        if (!taken[b]) x.bundles[static_cast<std::size_t>(center)] = bundles[b];
    }
    verify_on_graph(inst, x, g, "star_efx");
    return x;
}

Allocation core_identical_efx(const Instance& inst, const Graph& g, const CoreStructure& s) {
    require_agent_graph(inst, g);
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (auto reason = check_thm1_structure(inst, g, s)) throw ShapeMismatch(*reason);

    const std::vector<ItemSet> bundles =
        identical_bundles(inst, inst.valuation(s.core_groups[0][0]), inst.agent_count());
    std::vector<bool> taken(bundles.size(), false);
    Allocation x = Allocation::empty(inst.agent_count());
    for (int o : s.outer) {
        const std::size_t b = pick_best_bundle(inst, o, bundles, taken);
        taken[b] = true;
        x.bundles[static_cast<std::size_t>(o)] = bundles[b];
    }
    std::size_t next = 0;
    for (int c : s.core_groups[0]) {
        while (taken[next]) ++next;
        taken[next] = true;
        x.bundles[static_cast<std::size_t>(c)] = bundles[next];
    }
    verify_on_graph(inst, x, g, "core_identical_efx");
    return x;
}

Allocation consistent_core_efx(const Instance& inst, const Graph& g, const CoreStructure& s,
                               const ConsistentCoreOptions& opts) {
    require_agent_graph(inst, g);
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (!opts.bypass_shape_check) {
        if (auto reason = check_thm2_structure(inst, g, s)) throw ShapeMismatch(*reason);
    } else if (auto reason = check_core_partition(inst, g, s)) {
        // Bypass waives adjacency/consistency conditions, not basic sanity.
        throw ShapeMismatch(*reason);
    }

    const std::vector<int> pool_of_agent = agent_pools(g, s, opts.outer_pool_override);
    Instance proxy = Instance::create(inst.items(), proxy_valuations(inst, s, pool_of_agent));
    const Allocation y = efx_consistent_additive(proxy, all_agents(proxy));
    Allocation x = redistribute_by_pools(inst, s, pool_of_agent, y.bundles, opts.randomize_core_assignment_seed);
    if (!opts.bypass_shape_check) verify_on_graph(inst, x, g, "consistent_core_efx");
    return x;
}

Allocation two_type_core_efx(const Instance& inst, const Graph& g, const CoreStructure& s) {
    require_agent_graph(inst, g);
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (auto reason = check_thm3_structure(inst, g, s)) throw ShapeMismatch(*reason);

    const std::vector<int> pool_of_agent = agent_pools(g, s, {});
    Instance proxy = Instance::create(inst.items(), proxy_valuations(inst, s, pool_of_agent));
    const Allocation y = efx_two_types(proxy, all_agents(proxy));
    Allocation x = redistribute_by_pools(inst, s, pool_of_agent, y.bundles, std::nullopt);
    verify_on_graph(inst, x, g, "two_type_core_efx");
    return x;
}

Allocation three_edge_path_efx(const Instance& inst, const Graph& g) {
    require_agent_graph(inst, g);
    if (inst.agent_count() != 4 || g != make_path(4)) {
        throw ShapeMismatch("expected the path on four agents");
    }
    CoreStructure s;
    s.core_groups = {{1}, {2}};
    s.outer = {0, 3};
    return two_type_core_efx(inst, g, s);
}

Allocation core_identical_efx_chores(const Instance& inst, const Graph& g, const CoreStructure& s) {
    require_agent_graph(inst, g);
    if (!inst.chores_only()) throw BadSize("chores-only instance required");
    if (!inst.all_additive()) throw NotAdditive();
    if (auto reason = check_thm1_structure(inst, g, s)) throw ShapeMismatch(*reason);

    const std::vector<ItemSet> bundles =
        identical_bundles(inst, inst.valuation(s.core_groups[0][0]), inst.agent_count());
    std::vector<bool> taken(bundles.size(), false);
    Allocation x = Allocation::empty(inst.agent_count());
    for (int o : s.outer) {
        const std::size_t b = pick_best_bundle(inst, o, bundles, taken);
        taken[b] = true;
        x.bundles[static_cast<std::size_t>(o)] = bundles[b];
    }
    std::size_t next = 0;
    for (int c : s.core_groups[0]) {
        while (taken[next]) ++next;
        taken[next] = true;
        x.bundles[static_cast<std::size_t>(c)] = bundles[next];
    }
    verify_on_graph(inst, x, g, "core_identical_efx_chores");
    return x;
}

Allocation consistent_core_efx_chores(const Instance& inst, const Graph& g, const CoreStructure& s) {
    require_agent_graph(inst, g);
    if (!inst.chores_only()) throw BadSize("chores-only instance required");
    if (!inst.all_additive()) throw NotAdditive();
    if (auto reason = check_thm2_structure(inst, g, s)) throw ShapeMismatch(*reason);

    const std::vector<int> pool_of_agent = agent_pools(g, s, {});
    Instance proxy = Instance::create(inst.items(), proxy_valuations(inst, s, pool_of_agent));
    const Allocation y = efx_consistent_chores(proxy, all_agents(proxy));
    Allocation x = redistribute_by_pools(inst, s, pool_of_agent, y.bundles, std::nullopt);
    verify_on_graph(inst, x, g, "consistent_core_efx_chores");
    return x;
}

Allocation lex_mixed_diameter4(const Instance& inst, const Graph& g) {
    require_agent_graph(inst, g);
    if (!inst.all_lexicographic()) throw NotLexicographic();
    const auto dist = all_pairs_distance(g);
    int u = -1, v = -1;
    for (int i = 0; i < g.vertex_count() && u < 0; ++i) {
        for (int j = 0; j < g.vertex_count(); ++j) {
            if (i != j && dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= 4) {
                u = i;
                v = j;
                break;
            }
        }
    }
    if (u < 0) throw DiameterTooSmall();
    for (int w : g.neighbors(u)) {
        if (g.has_edge(w, v) || w == v) throw std::logic_error("u and v share a neighbor at distance >= 4");
    }

    Allocation x = Allocation::empty(inst.agent_count());
    std::vector<bool> allocated(static_cast<std::size_t>(inst.item_count()), false);
    // Each neighbor of u takes its own top remaining good.
    for (int w : g.neighbors(u)) {
        const auto& prio = std::get<LexicographicValuation>(inst.valuation(w)).priority;
        for (int item : prio) {
            if (!allocated[static_cast<std::size_t>(item)] && inst.kind_of(item) == ItemKind::Good) {
                allocated[static_cast<std::size_t>(item)] = true;
                x.bundles[static_cast<std::size_t>(w)].insert(item);
                break;
            }
        }
    }
    // v's highest-priority chores go one each to v's neighbors.
    {
        const auto& prio = std::get<LexicographicValuation>(inst.valuation(v)).priority;
        const auto& nbrs = g.neighbors(v);
        std::size_t next_nbr = 0;
        for (int item : prio) {
            if (next_nbr >= nbrs.size()) break;
            if (inst.kind_of(item) != ItemKind::Chore || allocated[static_cast<std::size_t>(item)]) continue;
            allocated[static_cast<std::size_t>(item)] = true;
            x.bundles[static_cast<std::size_t>(nbrs[next_nbr])].insert(item);
            ++next_nbr;
        }
    }
    for (int item = 0; item < inst.item_count(); ++item) {
        if (allocated[static_cast<std::size_t>(item)]) continue;
        const int sink = inst.kind_of(item) == ItemKind::Good ? u : v;
        x.bundles[static_cast<std::size_t>(sink)].insert(item);
    }
    verify_on_graph(inst, x, g, "lex_mixed_diameter4");
    return x;
}

}  // namespace graphfair
