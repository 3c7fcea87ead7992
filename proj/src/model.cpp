#include "graphfair/model.hpp"

#include <algorithm>

#include "graphfair/errors.hpp"

namespace graphfair {

bool is_additive(const Valuation& v) { return std::holds_alternative<AdditiveValuation>(v); }
bool is_numeric(const Valuation& v) { return !std::holds_alternative<LexicographicValuation>(v); }
bool is_lexicographic(const Valuation& v) { return std::holds_alternative<LexicographicValuation>(v); }

namespace {

void validate_valuation(const Valuation& v, const std::vector<Item>& items, bool goods_only, bool chores_only,
                        int agent) {
    const int m = static_cast<int>(items.size());
    const std::string who = "agent " + std::to_string(agent);
    if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
        if (static_cast<int>(add->values.size()) != m) {
            throw BadSize(who + ": additive valuation covers " + std::to_string(add->values.size()) +
                          " items, instance has " + std::to_string(m));
        }
        for (int g = 0; g < m; ++g) {
            if (items[g].kind == ItemKind::Good && add->values[g] < 0) {
                throw BadSize(who + ": negative value on good " + std::to_string(g));
            }
            if (items[g].kind == ItemKind::Chore && add->values[g] > 0) {
                throw BadSize(who + ": positive value on chore " + std::to_string(g));
            }
        }
    } else if (const auto* tab = std::get_if<TableValuation>(&v)) {
        if (m > 16) throw TooLarge(who + ": table valuations limited to 16 items");
        if (tab->by_subset.size() != (std::size_t{1} << m)) {
            throw BadSize(who + ": table has " + std::to_string(tab->by_subset.size()) + " entries, expected " +
                          std::to_string(std::size_t{1} << m));
        }
        if (goods_only) {
            // Monotone: adding a good never lowers the value.
            const std::size_t full = std::size_t{1} << m;
            for (std::size_t s = 0; s < full; ++s) {
                for (int g = 0; g < m; ++g) {
                    if (s & (std::size_t{1} << g)) continue;
                    if (tab->by_subset[s | (std::size_t{1} << g)] < tab->by_subset[s]) {
                        throw BadSize(who + ": table not monotone at subset " + std::to_string(s) + " + item " +
                                      std::to_string(g));
                    }
                }
            }
        }
        if (chores_only) {
            const std::size_t full = std::size_t{1} << m;
            for (std::size_t s = 0; s < full; ++s) {
                for (int g = 0; g < m; ++g) {
                    if (s & (std::size_t{1} << g)) continue;
                    if (tab->by_subset[s | (std::size_t{1} << g)] > tab->by_subset[s]) {
                        throw BadSize(who + ": table not monotone (chores) at subset " + std::to_string(s));
                    }
                }
            }
        }
    } else {
        const auto& lex = std::get<LexicographicValuation>(v);
        if (static_cast<int>(lex.priority.size()) != m) {
            throw BadSize(who + ": priority list covers " + std::to_string(lex.priority.size()) +
                          " items, instance has " + std::to_string(m));
        }
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (int id : lex.priority) {
            if (id < 0 || id >= m || seen[static_cast<std::size_t>(id)]) {
                throw BadSize(who + ": priority list is not a permutation of item ids");
            }
            seen[static_cast<std::size_t>(id)] = true;
        }
    }
}

}  // namespace

Instance Instance::create(std::vector<Item> items, std::vector<Valuation> valuations) {
    if (valuations.empty()) throw BadSize("instance needs at least one agent");
    for (int g = 0; g < static_cast<int>(items.size()); ++g) {
        if (items[static_cast<std::size_t>(g)].id != g) {
            throw BadSize("item ids must be 0..m-1 in order; found id " +
                          std::to_string(items[static_cast<std::size_t>(g)].id) + " at position " + std::to_string(g));
        }
    }
    Instance inst;
    inst.items_ = std::move(items);
    for (const auto& it : inst.items_) {
        if (it.kind == ItemKind::Good) inst.has_good_ = true;
        else inst.has_chore_ = true;
    }
    if (inst.items_.empty()) inst.has_good_ = true;  // vacuously goods-only
    for (std::size_t a = 0; a < valuations.size(); ++a) {
        validate_valuation(valuations[a], inst.items_, !inst.has_chore_, !inst.has_good_, static_cast<int>(a));
    }
    inst.valuations_ = std::move(valuations);
    return inst;
}

bool Instance::all_additive() const {
    return std::all_of(valuations_.begin(), valuations_.end(), [](const Valuation& v) { return is_additive(v); });
}

bool Instance::all_numeric() const {
    return std::all_of(valuations_.begin(), valuations_.end(), [](const Valuation& v) { return is_numeric(v); });
}

bool Instance::all_lexicographic() const {
    return std::all_of(valuations_.begin(), valuations_.end(),
                       [](const Valuation& v) { return is_lexicographic(v); });
}

Rational Instance::item_value(int agent, int item) const {
    const Valuation& v = valuations_[static_cast<std::size_t>(agent)];
    if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
        return add->values[static_cast<std::size_t>(item)];
    }
    if (const auto* tab = std::get_if<TableValuation>(&v)) {
        return tab->by_subset[std::size_t{1} << item];
    }
    throw LexicographicNotNumeric();
}

bool Allocation::is_partition_of(int item_count) const {
    std::vector<int> owners(static_cast<std::size_t>(item_count), 0);
    for (const auto& b : bundles) {
        for (int g : b) {
            if (g < 0 || g >= item_count) return false;
            owners[static_cast<std::size_t>(g)] += 1;
        }
    }
    return std::all_of(owners.begin(), owners.end(), [](int c) { return c == 1; });
}

}  // namespace graphfair
