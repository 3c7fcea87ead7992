#ifndef GRAPHFAIR_SWEEPING_HPP
#define GRAPHFAIR_SWEEPING_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "graphfair/model.hpp"

namespace graphfair {

enum class CutterSide { Left, Right };

struct SweepConfig {
    int max_rounds = 1000;
    // The reverse half-round normally stops short of the last edge (it was
    // just repaired at the end of the forward pass); this re-includes it.
    bool include_last_edge_in_reverse = false;
    // Who cuts when edge (e, e+1) is repaired in a given round (rounds count
    // from 1). Left = lower agent cuts. Null means always Left.
    std::function<CutterSide(int edge, int round)> role_policy;
};

enum class SweepOutcome { Success, Failure, MaxRounds };

struct PotentialSample {
    Rational phi1;  // total envy along path edges, both directions
    Rational phi2;  // total strong envy along path edges, both directions
    Rational phi3;  // minimum own-bundle value
    bool operator==(const PotentialSample&) const = default;
};

struct SweepTrace {
    SweepOutcome outcome = SweepOutcome::Success;
    int rounds = 0;
    // samples[0] is the starting state, samples[r] the state after round r.
    std::vector<PotentialSample> samples;
};

struct SweepResult {
    Allocation allocation;
    SweepTrace trace;
};

// Potentials of an allocation on the path over agent ids.
PotentialSample potentials(const Instance& inst, const Allocation& x);

// Round number of the first sample-over-sample increase of phi2, or -1 if the
// strong-envy potential never rises. Experiments use this to flag non-
// monotone trajectories.
int first_phi2_increase(const SweepTrace& trace);

// Repeated edge repair on the path over agent ids: start from everything in
// the first bundle, then sweep forward and backward across the edges, cutting
// and choosing on every edge that still has strong envy, until either no edge
// does (Success, output verified EFX on the path), a full round leaves the
// allocation unchanged (Failure), or the round cap is hit. Goods-only
// additive.
SweepResult sweep(const Instance& inst, const SweepConfig& config = {});

struct BatchItem {
    std::string id;
    Instance instance;
};

struct BatchResult {
    std::vector<std::pair<std::string, SweepResult>> runs;
    std::map<int, int> rounds_histogram;  // successes only, keyed by rounds
    int failures = 0;
    int round_capped = 0;
};

// Runs each instance independently in input order.
BatchResult run_batch(const std::vector<BatchItem>& items, const SweepConfig& config = {});

}  // namespace graphfair

#endif  // GRAPHFAIR_SWEEPING_HPP
