#ifndef GRAPHFAIR_MODEL_HPP
#define GRAPHFAIR_MODEL_HPP

#include <set>
#include <variant>
#include <vector>

#include "graphfair/rational.hpp"

namespace graphfair {

enum class ItemKind { Good, Chore };

struct Item {
    int id = 0;
    ItemKind kind = ItemKind::Good;

    bool operator==(const Item&) const = default;
};

using ItemSet = std::set<int>;

// values[g] is the agent's value for item id g. Goods must be >= 0, chores <= 0.
struct AdditiveValuation {
    std::vector<Rational> values;

    bool operator==(const AdditiveValuation&) const = default;
};

// Complete value table over all subsets of items, indexed by bitmask over item
// ids (bit g set = item g in the bundle). Only sensible for small m; instance
// construction enforces m <= 16 for tables.
struct TableValuation {
    std::vector<Rational> by_subset;  // size 2^m

    bool operator==(const TableValuation&) const = default;
};

// Pure ordinal valuation: priority[0] is the most important item. Comparisons
// go through prefers(); there is no numeric bundle value.
struct LexicographicValuation {
    std::vector<int> priority;  // permutation of item ids

    bool operator==(const LexicographicValuation&) const = default;
};

using Valuation = std::variant<AdditiveValuation, TableValuation, LexicographicValuation>;

bool is_additive(const Valuation& v);
bool is_numeric(const Valuation& v);  // additive or table
bool is_lexicographic(const Valuation& v);

class Instance {
  public:
    // Validates and throws (BadSize, ParseError-level problems use BadSize /
    // invalid_argument): item ids must be 0..m-1 in order, additive values must
    // respect item signs, tables must be complete and monotone when the
    // instance is goods-only, lexicographic priorities must be permutations.
    static Instance create(std::vector<Item> items, std::vector<Valuation> valuations);

    int agent_count() const { return static_cast<int>(valuations_.size()); }
    int item_count() const { return static_cast<int>(items_.size()); }

    const std::vector<Item>& items() const { return items_; }
    ItemKind kind_of(int item) const { return items_[item].kind; }
    const Valuation& valuation(int agent) const { return valuations_[agent]; }
    const std::vector<Valuation>& valuations() const { return valuations_; }

    bool goods_only() const { return !has_chore_; }
    bool chores_only() const { return !has_good_; }
    bool all_additive() const;
    bool all_numeric() const;
    bool all_lexicographic() const;

    // Single-item value for a numeric valuation.
    Rational item_value(int agent, int item) const;

  private:
    Instance() = default;
    std::vector<Item> items_;
    std::vector<Valuation> valuations_;
    bool has_good_ = false;
    bool has_chore_ = false;
};

// bundles[i] is agent i's bundle. Partial allocations are allowed (items not
// present anywhere are simply unallocated); predicates treat bundles as-is.
struct Allocation {
    std::vector<ItemSet> bundles;

    bool operator==(const Allocation&) const = default;

    static Allocation empty(int agents) { return Allocation{std::vector<ItemSet>(static_cast<std::size_t>(agents))}; }
    bool is_partition_of(int item_count) const;  // complete + disjoint
};

struct HiddenSet {
    ItemSet items;

    bool operator==(const HiddenSet&) const = default;
};

}  // namespace graphfair

#endif  // GRAPHFAIR_MODEL_HPP
