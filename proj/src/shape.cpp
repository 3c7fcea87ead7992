#include "graphfair/shape.hpp"

#include <algorithm>
#include <set>

#include "graphfair/errors.hpp"

namespace graphfair {

namespace {

std::string agent_list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// Partition sanity plus outer independence, shared by every shape.
std::optional<std::string> check_split(const Instance& inst, const Graph& g, const CoreStructure& s) {
    if (auto r = check_core_partition(inst, g, s)) return r;
    for (std::size_t i = 0; i < s.outer.size(); ++i) {
        for (std::size_t j = i + 1; j < s.outer.size(); ++j) {
            if (g.has_edge(s.outer[i], s.outer[j])) {
                return "outer agents " + std::to_string(s.outer[i]) + " and " + std::to_string(s.outer[j]) +
                       " are adjacent";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_groups_identical(const Instance& inst, const CoreStructure& s) {
    for (const auto& grp : s.core_groups) {
        for (std::size_t i = 1; i < grp.size(); ++i) {
            if (!valuations_identical(inst, grp[0], grp[i])) {
                return "agents " + std::to_string(grp[0]) + " and " + std::to_string(grp[i]) +
                       " in one core group have different valuations";
            }
        }
    }
    return std::nullopt;
}

// Every outer agent's neighborhood must live inside a single core group.
std::optional<std::string> check_outer_neighborhoods(const Graph& g, const CoreStructure& s) {
    std::vector<int> group_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t k = 0; k < s.core_groups.size(); ++k) {
        for (int a : s.core_groups[k]) group_of[static_cast<std::size_t>(a)] = static_cast<int>(k);
    }
    for (int o : s.outer) {
        int pool = -1;
        for (int w : g.neighbors(o)) {
            const int k = group_of[static_cast<std::size_t>(w)];
            if (k < 0) continue;  // outer-outer edges already rejected by the split check
            if (pool >= 0 && k != pool) {
                return "outer agent " + std::to_string(o) + " is adjacent to agents in different core groups";
            }
            pool = k;
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_numeric(const Instance& inst) {
    for (int a = 0; a < inst.agent_count(); ++a) {
        if (!is_numeric(inst.valuation(a))) return "agent " + std::to_string(a) + " has an ordinal valuation";
    }
    return std::nullopt;
}

std::optional<std::string> check_additive(const Instance& inst) {
    for (int a = 0; a < inst.agent_count(); ++a) {
        if (!is_additive(inst.valuation(a))) return "agent " + std::to_string(a) + " is not additive";
    }
    return std::nullopt;
}

std::vector<int> all_core_agents(const CoreStructure& s) {
    std::vector<int> core;
    for (const auto& grp : s.core_groups) core.insert(core.end(), grp.begin(), grp.end());
    std::sort(core.begin(), core.end());
    return core;
}

// Builds the structure for a candidate core by grouping identical valuations.
CoreStructure structure_from_core(const Instance& inst, const std::vector<int>& core) {
    CoreStructure s;
    for (int a : core) {
        bool placed = false;
        for (auto& grp : s.core_groups) {
            if (valuations_identical(inst, grp[0], a)) {
                grp.push_back(a);
                placed = true;
                break;
            }
        }
        if (!placed) s.core_groups.push_back({a});
    }
    std::vector<bool> in_core(static_cast<std::size_t>(inst.agent_count()), false);
    for (int a : core) in_core[static_cast<std::size_t>(a)] = true;
    for (int a = 0; a < inst.agent_count(); ++a) {
        if (!in_core[static_cast<std::size_t>(a)]) s.outer.push_back(a);
    }
    return s;
}

template <typename Check>
CoreStructure search_core(const Instance& inst, const Graph& g, int max_n, const char* shape, Check check) {
    const int n = inst.agent_count();
    if (n > max_n) {
        throw TooLarge("shape search limited to " + std::to_string(max_n) + " agents, got " + std::to_string(n));
    }
    // Largest core first; combinations of one size come out in lexicographic
    // order, which pins the tie-break.
    for (int size = n; size >= 1; --size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            CoreStructure s = structure_from_core(inst, pick);
            if (!check(inst, g, s)) return s;
            // next combination
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            pick[static_cast<std::size_t>(i)] += 1;
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    throw ShapeMismatch(std::string("no agent subset forms a valid ") + shape + " core");
}

}  // namespace

std::optional<std::string> check_core_partition(const Instance& inst, const Graph& g, const CoreStructure& s) {
    const int n = inst.agent_count();
    if (g.vertex_count() != n) {
        return "graph has " + std::to_string(g.vertex_count()) + " vertices for " + std::to_string(n) + " agents";
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    int core_size = 0;
    for (const auto& grp : s.core_groups) {
        if (grp.empty()) return "empty core group";
        for (int a : grp) {
            if (a < 0 || a >= n) return "agent id " + std::to_string(a) + " out of range";
            seen[static_cast<std::size_t>(a)] += 1;
            ++core_size;
        }
    }
    for (int a : s.outer) {
        if (a < 0 || a >= n) return "agent id " + std::to_string(a) + " out of range";
        seen[static_cast<std::size_t>(a)] += 1;
    }
    for (int a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)] != 1) {
            return "agent " + std::to_string(a) + " must appear exactly once across core and outer";
        }
    }
    if (core_size == 0) return "core is empty";
    return std::nullopt;
}

std::optional<std::string> check_thm1_structure(const Instance& inst, const Graph& g, const CoreStructure& s) {
    if (auto r = check_split(inst, g, s)) return r;
    if (auto r = check_numeric(inst)) return r;
    if (s.core_groups.size() != 1) {
        return "expected a single core group, got " + std::to_string(s.core_groups.size());
    }
    return check_groups_identical(inst, s);
}

std::optional<std::string> check_thm2_structure(const Instance& inst, const Graph& g, const CoreStructure& s) {
    if (auto r = check_split(inst, g, s)) return r;
    if (auto r = check_additive(inst)) return r;
    if (auto r = check_groups_identical(inst, s)) return r;
    for (std::size_t i = 0; i < s.core_groups.size(); ++i) {
        for (std::size_t j = i + 1; j < s.core_groups.size(); ++j) {
            if (valuations_identical(inst, s.core_groups[i][0], s.core_groups[j][0])) {
                return "core groups " + agent_list(s.core_groups[i]) + " and " + agent_list(s.core_groups[j]) +
                       " share a valuation and must be merged";
            }
        }
    }
    if (!are_consistent(inst, all_core_agents(s))) return "core agents do not share a compatible ranking";
    return check_outer_neighborhoods(g, s);
}

std::optional<std::string> check_thm3_structure(const Instance& inst, const Graph& g, const CoreStructure& s) {
    if (auto r = check_split(inst, g, s)) return r;
    if (auto r = check_numeric(inst)) return r;
    if (s.core_groups.size() > 2) {
        return "expected at most two core groups, got " + std::to_string(s.core_groups.size());
    }
    if (auto r = check_groups_identical(inst, s)) return r;
    return check_outer_neighborhoods(g, s);
}

CoreStructure validate_thm1_shape(const Instance& inst, const Graph& g, int max_n) {
    return search_core(inst, g, max_n, "single-valuation",
                       [](const Instance& i, const Graph& gr, const CoreStructure& s) {
                           return check_thm1_structure(i, gr, s);
                       });
}

CoreStructure validate_thm2_shape(const Instance& inst, const Graph& g, int max_n) {
    return search_core(inst, g, max_n, "consistent-grouped",
                       [](const Instance& i, const Graph& gr, const CoreStructure& s) {
                           return check_thm2_structure(i, gr, s);
                       });
}

CoreStructure validate_thm3_shape(const Instance& inst, const Graph& g, int max_n) {
    return search_core(inst, g, max_n, "two-type",
                       [](const Instance& i, const Graph& gr, const CoreStructure& s) {
                           return check_thm3_structure(i, gr, s);
                       });
}

std::vector<int> outer_pools(const Graph& g, const CoreStructure& s) {
    std::vector<int> group_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t k = 0; k < s.core_groups.size(); ++k) {
        for (int a : s.core_groups[k]) group_of[static_cast<std::size_t>(a)] = static_cast<int>(k);
    }
    std::vector<int> pools;
    pools.reserve(s.outer.size());
    for (int o : s.outer) {
        int pool = 0;
        for (int w : g.neighbors(o)) {
            const int k = group_of[static_cast<std::size_t>(w)];
            if (k >= 0) {
                pool = k;
                break;
            }
        }
        pools.push_back(pool);
    }
    return pools;
}

}  // namespace graphfair
