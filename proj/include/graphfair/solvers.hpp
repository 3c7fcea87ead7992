#ifndef GRAPHFAIR_SOLVERS_HPP
#define GRAPHFAIR_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphfair/envy.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/model.hpp"

namespace graphfair {

// Cut-and-choose repair of one edge. Pools both bundles, rebuilds two bags
// greedily under the cutter's valuation (descending value, ties by ascending
// item id, each item into the currently lighter bag, ties to the first bag),
// then the chooser takes its better bag (ties to the first). Returns
// (cutter's bag, chooser's bag). Goods-only additive.
std::pair<ItemSet, ItemSet> local_efx(const Instance& inst, int cutter, int chooser, const ItemSet& a,
                                      const ItemSet& b);

// Greedy bag-fill for agents sharing one additive goods valuation: items in
// descending value order, each into the currently minimum bag. Named agents
// receive the bags in ascending order; everyone else gets nothing.
Allocation efx_identical_additive(const Instance& inst, const std::vector<int>& agents);

// Complete-graph EFX among named agents whose additive goods valuations share
// a compatible ranking. Identical valuations take the greedy route; otherwise
// first-found exhaustive search (existence is guaranteed for such inputs, so
// exhaustion signals a bug via SearchExhausted).
Allocation efx_consistent_additive(const Instance& inst, const std::vector<int>& agents);

// Complete-graph EFX among named agents holding at most two distinct numeric
// goods valuations. Search-based.
Allocation efx_two_types(const Instance& inst, const std::vector<int>& agents);

// Complete-graph EFX among named agents with consistent additive chores-only
// valuations. Search-based.
Allocation efx_consistent_chores(const Instance& inst, const std::vector<int>& agents);

// First allocation (in deterministic enumeration order) with no strong envy
// across any edge of g, or nullopt after exhausting all n^m assignments.
// Refuses up front when n^m exceeds the budget.
std::optional<Allocation> brute_force_efx_search(const Instance& inst, const Graph& g,
                                                 std::uint64_t budget = 10'000'000);

}  // namespace graphfair

#endif  // GRAPHFAIR_SOLVERS_HPP
