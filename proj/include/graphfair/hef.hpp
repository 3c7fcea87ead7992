#ifndef GRAPHFAIR_HEF_HPP
#define GRAPHFAIR_HEF_HPP

#include <optional>
#include <vector>

#include "graphfair/envy.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/model.hpp"

namespace graphfair {

struct VcrrResult {
    Allocation allocation;
    HiddenSet hidden;
    // Items in pick order, per agent; used by tests to check pick monotonicity.
    std::vector<std::vector<int>> picks;
};

// Round robin over one connected component, cover members first (ascending
// id), then the rest of the component (ascending id); every turn takes the
// picker's highest-valued unallocated good, lowest id on ties. The hidden set
// collects each cover member's first pick, certifying uniform hidden
// envy-freeness with at most |cover| hidden goods. Goods-only additive.
VcrrResult vertex_cover_round_robin(const Instance& inst, const Graph& g, const std::vector<int>& component,
                                    const std::vector<int>& cover);

// Agents pick in the given order, each taking its highest-valued unallocated
// good (lowest id on ties). The order must be long enough to place every
// good. Goods-only numeric.
Allocation picking_sequence(const Instance& inst, const std::vector<int>& order);

struct StarBridgeCliqueRun {
    Graph graph;
    Allocation allocation;
    HiddenSet hidden;
};

// Adversarial family showing two hidden goods can suffice while every vertex
// cover is large: on the star-bridge-clique graph, the star side picks round
// robin twice, the bridge picks once, the clique never picks. Hiding the
// center's first good and the bridge's only good certifies uniform hidden
// envy-freeness. Requires m == n >= 3, additive goods.
StarBridgeCliqueRun star_bridge_clique_protocol(const Instance& inst);

// Smallest hidden set making the allocation pass is_g_hef, or nullopt when
// the uniform variant is infeasible. Searches subsets of goods appearing in
// envied bundles by increasing size, lexicographically within a size.
std::optional<HiddenSet> min_hidden_set(const Instance& inst, const Allocation& x, const Graph& g, bool uniform,
                                        int max_m = 18);

// Identical-valuation instance over the graph's agents with `scale` goods
// (default n^3) where good j (0-based) is worth 1 + 2^-(j+1). Subset values
// sit strictly between |S| and |S|+1 and are pairwise distinct, which forces
// hidden sets as large as a vertex cover on this family.
Instance gen_lower_bound_instance(const Graph& g, int scale = -1);

Rational lower_bound_item_value(int item_id);

}  // namespace graphfair

#endif  // GRAPHFAIR_HEF_HPP
