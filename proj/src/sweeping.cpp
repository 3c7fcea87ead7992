#include "graphfair/sweeping.hpp"

#include <stdexcept>

#include "graphfair/envy.hpp"
#include "graphfair/errors.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/solvers.hpp"

namespace graphfair {

PotentialSample potentials(const Instance& inst, const Allocation& x) {
    const int n = inst.agent_count();
    PotentialSample s{Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i + 1 < n; ++i) {
        s.phi1 += envy_amount(inst, x, i, i + 1) + envy_amount(inst, x, i + 1, i);
        s.phi2 += strong_envy_amount(inst, x, i, i + 1) + strong_envy_amount(inst, x, i + 1, i);
    }
    s.phi3 = bundle_value(inst, 0, x.bundles[0]);
    for (int i = 1; i < n; ++i) {
        const Rational own = bundle_value(inst, i, x.bundles[static_cast<std::size_t>(i)]);
        if (own < s.phi3) s.phi3 = own;
    }
    return s;
}

int first_phi2_increase(const SweepTrace& trace) {
    for (std::size_t r = 1; r < trace.samples.size(); ++r) {
        if (trace.samples[r].phi2 > trace.samples[r - 1].phi2) return static_cast<int>(r);
    }
    return -1;
}

namespace {

bool edge_has_strong_envy(const Instance& inst, const Allocation& x, int i) {
    return strong_envy_amount(inst, x, i, i + 1) > 0 || strong_envy_amount(inst, x, i + 1, i) > 0;
}

bool any_strong_envy(const Instance& inst, const Allocation& x) {
    for (int i = 0; i + 1 < inst.agent_count(); ++i) {
        if (edge_has_strong_envy(inst, x, i)) return true;
    }
    return false;
}

// Repairs edge (i, i+1) in place unless it is already clean.
void repair_edge(const Instance& inst, Allocation& x, int i, int round, const SweepConfig& config) {
    if (!edge_has_strong_envy(inst, x, i)) return;
    const CutterSide side = config.role_policy ? config.role_policy(i, round) : CutterSide::Left;
    const int cutter = side == CutterSide::Left ? i : i + 1;
    const int chooser = side == CutterSide::Left ? i + 1 : i;
    auto [cutter_bag, chooser_bag] = local_efx(inst, cutter, chooser, x.bundles[static_cast<std::size_t>(i)],
                                               x.bundles[static_cast<std::size_t>(i) + 1]);
    x.bundles[static_cast<std::size_t>(cutter)] = std::move(cutter_bag);
    x.bundles[static_cast<std::size_t>(chooser)] = std::move(chooser_bag);
}

}  // namespace

SweepResult sweep(const Instance& inst, const SweepConfig& config) {
    if (!inst.goods_only()) throw ChoresUnsupported();
    if (!inst.all_additive()) throw NotAdditive();
    if (config.max_rounds < 1) throw BadSize("max_rounds must be at least 1");
    const int n = inst.agent_count();

    SweepResult result;
    result.allocation = Allocation::empty(n);
    for (int g = 0; g < inst.item_count(); ++g) result.allocation.bundles[0].insert(g);
    result.trace.samples.push_back(potentials(inst, result.allocation));

    while (true) {
        if (!any_strong_envy(inst, result.allocation)) {
            result.trace.outcome = SweepOutcome::Success;
            break;
        }
        if (result.trace.rounds == config.max_rounds) {
            result.trace.outcome = SweepOutcome::MaxRounds;
            return result;
        }
        const Allocation before = result.allocation;
        const int round = ++result.trace.rounds;
        for (int i = 0; i + 1 < n; ++i) repair_edge(inst, result.allocation, i, round, config);
        const int reverse_start = config.include_last_edge_in_reverse ? n - 2 : n - 3;
        for (int i = reverse_start; i >= 0; --i) repair_edge(inst, result.allocation, i, round, config);
        result.trace.samples.push_back(potentials(inst, result.allocation));
        if (result.allocation == before) {
            // A full round was a fixed point while strong envy remains.
            result.trace.outcome = SweepOutcome::Failure;
            return result;
        }
    }

    if (!result.allocation.is_partition_of(inst.item_count()) ||
        !is_g_efx(inst, result.allocation, make_path(n))) {
        throw std::logic_error("sweep: successful outcome failed verification");
    }
    return result;
}

BatchResult run_batch(const std::vector<BatchItem>& items, const SweepConfig& config) {
    BatchResult out;
    for (const auto& item : items) {
        SweepResult r = sweep(item.instance, config);
        switch (r.trace.outcome) {
            case SweepOutcome::Success:
                out.rounds_histogram[r.trace.rounds] += 1;
                break;
            case SweepOutcome::Failure:
                out.failures += 1;
                break;
            case SweepOutcome::MaxRounds:
                out.round_capped += 1;
                break;
        }
        out.runs.emplace_back(item.id, std::move(r));
    }
    return out;
}

}  // namespace graphfair
