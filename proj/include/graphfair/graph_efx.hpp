#ifndef GRAPHFAIR_GRAPH_EFX_HPP
#define GRAPHFAIR_GRAPH_EFX_HPP

#include <map>
#include <optional>

#include "graphfair/model.hpp"
#include "graphfair/shape.hpp"

namespace graphfair {

// Star graphs: bundles are built EFX under the center's valuation, the leaves
// pick their favorites in ascending id order, the center keeps the last bag.
// Center must be numeric; goods only.
Allocation star_efx(const Instance& inst, const Graph& g, int center);

// thm1 construction: one identical-valuation core, independent outer. Bundles
// EFX under the core valuation; outer agents pick first (ascending id), core
// agents absorb the leftovers.
Allocation core_identical_efx(const Instance& inst, const Graph& g, const CoreStructure& s);

struct ConsistentCoreOptions {
    // Skips the shape check and the final verification. Exists so the known
    // failure mode (an outer agent proxying the wrong neighbor valuation) can
    // be reproduced in tests; normal callers leave this off.
    bool bypass_shape_check = false;
    // Force specific pool choices for outer agents (agent id -> group index).
    std::map<int, int> outer_pool_override;
    // Shuffle which leftover bundle each core agent receives within its pool.
    // Any pool-respecting assignment must verify; used by property tests.
    std::optional<unsigned> randomize_core_assignment_seed;
};

// thm2 construction: consistent grouped core. Outer agents proxy their
// neighbor group's valuation, a complete-graph EFX allocation is built for
// the proxied profile, and bundles flow back pool by pool: outer agents pick
// from their pool first, core agents take what remains of their own pool.
Allocation consistent_core_efx(const Instance& inst, const Graph& g, const CoreStructure& s,
                               const ConsistentCoreOptions& opts = {});

// thm3 construction: two-type core, same proxy-and-redistribute scheme with
// one pool per type.
Allocation two_type_core_efx(const Instance& inst, const Graph& g, const CoreStructure& s);

// Path on four agents, handled as a two-type core on the middle pair with the
// endpoints proxying their middle neighbor.
Allocation three_edge_path_efx(const Instance& inst, const Graph& g);

// Chores counterparts of the thm1/thm2 constructions. Outer agents pick the
// least burdensome remaining bundle; chores-only additive.
Allocation core_identical_efx_chores(const Instance& inst, const Graph& g, const CoreStructure& s);
Allocation consistent_core_efx_chores(const Instance& inst, const Graph& g, const CoreStructure& s);

// Mixed goods and chores under lexicographic preferences on a graph of
// diameter at least 4: picks the lowest-id vertex pair (u,v) at distance
// >= 4, gives each neighbor of u its single top good, deals v's top chores
// one each to v's neighbors, dumps remaining goods on u and remaining chores
// on v; everyone else gets nothing.
Allocation lex_mixed_diameter4(const Instance& inst, const Graph& g);

}  // namespace graphfair

#endif  // GRAPHFAIR_GRAPH_EFX_HPP
