#ifndef GRAPHFAIR_IO_HPP
#define GRAPHFAIR_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphfair/graph.hpp"
#include "graphfair/model.hpp"
#include "graphfair/sweeping.hpp"

namespace graphfair {

struct ParsedInstance {
    Instance instance;
    Graph graph;
};

// Instance JSON:
// {
//   "agents": 3,
//   "items": [{"id": 0, "kind": "good"}, ...],
//   "valuations": [
//     {"type": "additive", "values": ["3", "1/2", 7]},
//     {"type": "table", "entries": [[[0, 1], "5"], ...]},   // one per subset
//     {"type": "lexicographic", "priority": [2, 0, 1]}
//   ],
//   "graph": {"type": "path"|"star"|"complete"|"custom", "n": 3,
//             "edges": [[0, 1], ...]}                        // custom only
// }
// Rationals are "p/q" strings; bare integers are accepted as shorthand.
ParsedInstance parse_instance_json(const std::string& text);
std::string write_instance_json(const Instance& inst, const Graph& g);

// Allocation JSON: {"bundles": [[0, 1], [2], []]}.
Allocation parse_allocation_json(const std::string& text, int agents, int items);
std::string write_allocation_json(const Allocation& x);

// CSV rows "instance_id,agent_index,p1,...,pm" with nonnegative integer
// points per good (one row per agent, same width within an instance, header
// row optional). Each instance becomes a goods-only additive instance, to be
// swept on the path over its agents. Rows whose points do not sum to 1000
// produce a warning, not an error.
struct SplidditData {
    std::vector<BatchItem> instances;
    std::vector<std::string> warnings;
};

SplidditData ingest_spliddit(std::istream& in);
SplidditData ingest_spliddit_file(const std::string& path);

enum class KindMix { Goods, Chores, Mixed };

// Deterministic per seed: integer values in [0, max_value] for goods and
// [-max_value, 0] for chores.
Instance gen_random_instance(int n, int m, long max_value, KindMix mix, std::uint64_t seed);

// Trace CSV: "instance_id,round,phi1,phi2,phi3" with round 0 = initial state.
std::string write_trace_csv(const std::vector<std::pair<std::string, SweepTrace>>& traces);
std::vector<std::pair<std::string, std::vector<PotentialSample>>> parse_trace_csv(const std::string& text);

}  // namespace graphfair

#endif  // GRAPHFAIR_IO_HPP
