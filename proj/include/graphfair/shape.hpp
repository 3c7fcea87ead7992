#ifndef GRAPHFAIR_SHAPE_HPP
#define GRAPHFAIR_SHAPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphfair/envy.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/model.hpp"

namespace graphfair {

// A core/outer split of the agents. Groups are disjoint, sorted, ordered by
// smallest member; agents inside one group share a valuation. Outer agents
// are everyone else and must form an independent set.
struct CoreStructure {
    std::vector<std::vector<int>> core_groups;
    std::vector<int> outer;

    bool operator==(const CoreStructure&) const = default;
};

// Structure checks return std::nullopt when the proposal fits, otherwise the
// violated condition. The thm1/thm2/thm3 names line up with the solver
// algorithm names exposed by the CLI.
//
// Partition sanity only: groups and outer tile the agents, no group empty,
// core nonempty. No adjacency or valuation conditions.
std::optional<std::string> check_core_partition(const Instance& inst, const Graph& g, const CoreStructure& s);

// thm1: one group, identical numeric valuations, independent outer.
std::optional<std::string> check_thm1_structure(const Instance& inst, const Graph& g, const CoreStructure& s);

// thm2: additive instance, groups identical inside and pairwise distinct,
// whole core mutually consistent, independent outer, and every outer agent
// adjacent to at most one group.
std::optional<std::string> check_thm2_structure(const Instance& inst, const Graph& g, const CoreStructure& s);

// thm3: at most two groups, identical inside (the two group valuations may
// coincide), numeric, independent outer, outer adjacency within one group.
std::optional<std::string> check_thm3_structure(const Instance& inst, const Graph& g, const CoreStructure& s);

// Search for the largest-core structure passing the corresponding check;
// ties broken by lexicographically smallest core vertex set. Exhaustive over
// agent subsets, so bounded by max_n (TooLarge beyond). Throws ShapeMismatch
// when no subset works.
CoreStructure validate_thm1_shape(const Instance& inst, const Graph& g, int max_n = 20);
CoreStructure validate_thm2_shape(const Instance& inst, const Graph& g, int max_n = 20);
CoreStructure validate_thm3_shape(const Instance& inst, const Graph& g, int max_n = 20);

// Pool index (into core_groups) each outer agent draws from: the group its
// neighbors belong to, or group 0 for isolated outer agents. Aligned with
// structure.outer.
std::vector<int> outer_pools(const Graph& g, const CoreStructure& s);

}  // namespace graphfair

#endif  // GRAPHFAIR_SHAPE_HPP
