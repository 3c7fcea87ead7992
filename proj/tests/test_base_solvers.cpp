#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>

#include "graphfair/envy.hpp"
#include "graphfair/errors.hpp"
#include "graphfair/io.hpp"
#include "graphfair/solvers.hpp"
#include "helpers.hpp"

using namespace graphfair;
using namespace graphfair::testing;

namespace {

std::optional<Allocation> oracle_first_efx(const Instance& inst, const Graph& g) {
    std::optional<Allocation> found;
    for_each_allocation(inst.agent_count(), inst.item_count(), [&](const Allocation& x) {
        if (!found && oracle_is_g_efx(inst, x, g)) found = x;
    });
    return found;
}

}  // namespace

TEST_CASE("cut and choose rebuilds one edge") {
    // cutter weighs 5,4,3,2; chooser cares almost only about the last good
    const Instance inst = goods_instance({{5, 4, 3, 2}, {1, 1, 1, 10}});
    const auto [cut, chosen] = local_efx(inst, 0, 1, {0, 1}, {2, 3});
    CHECK(cut == ItemSet{1, 2});
    CHECK(chosen == ItemSet{0, 3});
}

TEST_CASE("cut and choose leaves no strong envy on the repaired edge") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst = gen_random_instance(2, 6, 30, KindMix::Goods, seed);
        for_each_allocation(2, 6, [&](const Allocation& x) {
            if (seed % 7 != x.bundles[0].size() % 7) return;  // thin out
            const auto [a, b] = local_efx(inst, 0, 1, x.bundles[0], x.bundles[1]);
            ItemSet pooled;
            pooled.insert(x.bundles[0].begin(), x.bundles[0].end());
            pooled.insert(x.bundles[1].begin(), x.bundles[1].end());
            ItemSet together = a;
            together.insert(b.begin(), b.end());
            CHECK(together == pooled);
            CHECK(a.size() + b.size() == pooled.size());
            const Allocation repaired = {{a, b}};
            CHECK_FALSE(strongly_envies(inst, repaired, 0, 1));
            CHECK_FALSE(strongly_envies(inst, repaired, 1, 0));
        });
    }
}

TEST_CASE("cut and choose rejects chores") {
    const Instance inst = chores_instance({{-1, -2}, {-3, -1}});
    CHECK_THROWS_AS(local_efx(inst, 0, 1, {0}, {1}), ChoresUnsupported);
}

TEST_CASE("greedy bags for one shared valuation") {
    // shared weights 8,0,0,0,0,2: the two valuable goods anchor two bags and
    // everything worthless piles into the third
    const Instance inst = goods_instance({{8, 0, 0, 0, 0, 2}, {8, 0, 0, 0, 0, 2}, {8, 0, 0, 0, 0, 2}});
    const Allocation x = efx_identical_additive(inst, {0, 1, 2});
    CHECK(x.bundles[0] == ItemSet{0});
    CHECK(x.bundles[1] == ItemSet{5});
    CHECK(x.bundles[2] == ItemSet{1, 2, 3, 4});
    CHECK(is_g_efx(inst, x, make_complete(3)));

    const Instance mixed_vals = goods_instance({{8, 1}, {1, 8}});
    CHECK_THROWS_AS(efx_identical_additive(mixed_vals, {0, 1}), NotConsistent);
}

TEST_CASE("greedy bags are EFX for any identical profile") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Instance one = gen_random_instance(1, 2 + static_cast<int>(seed % 7), 50, KindMix::Goods, seed);
        std::vector<Valuation> copies(3, one.valuation(0));
        const Instance inst = Instance::create(one.items(), copies);
        const Allocation x = efx_identical_additive(inst, {0, 1, 2});
        CHECK(x.is_partition_of(inst.item_count()));
        CHECK(is_g_efx(inst, x, make_complete(3)));
    }
}

TEST_CASE("search for compatible rankings returns the first fit") {
    // two agents tie where the third is strict, so the profile is compatible
    const Instance inst = goods_instance({{9, 1, 0, 0, 0, 0}, {2, 2, 2, 1, 2, 1}, {2, 2, 2, 1, 2, 1}});
    REQUIRE(are_consistent(inst, {0, 1, 2}));
    const Allocation x = efx_consistent_additive(inst, {0, 1, 2});
    CHECK(x.bundles[0] == ItemSet{0, 1});
    CHECK(x.bundles[1] == ItemSet{2, 3});
    CHECK(x.bundles[2] == ItemSet{4, 5});
    CHECK(is_g_efx(inst, x, make_complete(3)));

    const Instance opposed = goods_instance({{5, 1}, {1, 5}});
    CHECK_THROWS_AS(efx_consistent_additive(opposed, {0, 1}), NotConsistent);
}

TEST_CASE("compatible-ranking search is EFX and deterministic") {
    // Sorting every agent's values in the same item order rules out opposing
    // strict preferences, so the whole family is compatible by construction.
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Instance raw = gen_random_instance(3, 5, 20, KindMix::Goods, seed);
        std::vector<std::vector<long>> sorted_vals;
        for (int a = 0; a < 3; ++a) {
            std::vector<long> row;
            for (int g = 0; g < 5; ++g)
                row.push_back(static_cast<long>(raw.item_value(a, g).convert_to<long long>()));
            std::sort(row.rbegin(), row.rend());
            sorted_vals.push_back(std::move(row));
        }
        const Instance inst = goods_instance(sorted_vals);
        REQUIRE(are_consistent(inst, {0, 1, 2}));
        const Allocation x = efx_consistent_additive(inst, {0, 1, 2});
        CHECK(x.is_partition_of(5));
        CHECK(is_g_efx(inst, x, make_complete(3)));
        CHECK(efx_consistent_additive(inst, {0, 1, 2}) == x);
    }
}

TEST_CASE("two-type search handles opposed pairs") {
    const Instance inst = goods_instance({{9, 1, 1, 1}, {1, 1, 1, 9}, {9, 1, 1, 1}});
    const Allocation x = efx_two_types(inst, {0, 1, 2});
    CHECK(x.is_partition_of(4));
    CHECK(is_g_efx(inst, x, make_complete(3)));

    const Instance three = goods_instance({{9, 1, 0}, {0, 9, 1}, {1, 0, 9}});
    CHECK_THROWS_AS(efx_two_types(three, {0, 1, 2}), BadSize);
    const Instance lex = lex_instance({ItemKind::Good, ItemKind::Good}, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(efx_two_types(lex, {0, 1}), LexicographicNotNumeric);
}

TEST_CASE("two-type search agrees with enumeration when valuations differ") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        const Instance base = gen_random_instance(2, 5, 9, KindMix::Goods, seed);
        if (valuations_identical(base, 0, 1)) continue;
        const Instance inst =
            Instance::create(base.items(), {base.valuation(0), base.valuation(1), base.valuation(0)});
        const Allocation x = efx_two_types(inst, {0, 1, 2});
        CHECK(x.is_partition_of(5));
        CHECK(is_g_efx(inst, x, make_complete(3)));
    }
}

TEST_CASE("chores search splits the burden") {
    const Instance inst = chores_instance({{-3, -2, -1}, {-3, -2, -1}});
    const Allocation x = efx_consistent_chores(inst, {0, 1});
    CHECK(x.bundles[0] == ItemSet{0});
    CHECK(x.bundles[1] == ItemSet{1, 2});
    CHECK(is_g_efx(inst, x, make_complete(2)));

    const Instance goods = goods_instance({{1, 2}});
    CHECK_THROWS_AS(efx_consistent_chores(goods, {0}), BadSize);
}

TEST_CASE("chores search is EFX across random compatible profiles") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 300 && tested < 25; ++seed) {
        const Instance inst = gen_random_instance(3, 5, 5, KindMix::Chores, seed);
        if (!are_consistent(inst, {0, 1, 2})) continue;
        ++tested;
        const Allocation x = efx_consistent_chores(inst, {0, 1, 2});
        CHECK(x.is_partition_of(5));
        CHECK(is_g_efx(inst, x, make_complete(3)));
    }
    CHECK(tested > 0);
}

TEST_CASE("an almost fair split can still fail the single-item test") {
    const Instance inst = goods_instance({{10, 2, 1}, {10, 2, 1}});
    const Allocation x = alloc({{0, 2}, {1}});
    CHECK_FALSE(is_g_efx(inst, x, make_complete(2)));
    // dropping the cheap extra fixes it
    CHECK(is_g_efx(inst, alloc({{0}, {1, 2}}), make_complete(2)));
}

TEST_CASE("exhaustive search returns the first allocation in digit order") {
    const Instance inst = three_agent_path_fixture();
    const Graph path = make_path(3);
    const auto mine = brute_force_efx_search(inst, path);
    const auto expected = oracle_first_efx(inst, path);
    REQUIRE(mine.has_value());
    REQUIRE(expected.has_value());
    CHECK(*mine == *expected);

    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        const Instance rnd = gen_random_instance(3, 4, 8, KindMix::Mixed, seed);
        const Graph g = (seed % 2 == 0) ? make_path(3) : make_complete(3);
        const auto got = brute_force_efx_search(rnd, g);
        const auto want = oracle_first_efx(rnd, g);
        CHECK(got.has_value() == want.has_value());
        if (got && want) CHECK(*got == *want);
    }
}

TEST_CASE("exhaustive search refuses oversized spaces up front") {
    const Instance inst = gen_random_instance(4, 12, 10, KindMix::Goods, 1);
    CHECK_THROWS_AS(brute_force_efx_search(inst, make_path(4), 1000), BudgetExceeded);
    // 4^12 = 16.7M > default 10M
    CHECK_THROWS_AS(brute_force_efx_search(inst, make_path(4)), BudgetExceeded);
}

TEST_CASE("searches ignore agents outside the named set") {
    const Instance inst = goods_instance({{4, 3, 2, 1}, {9, 9, 9, 9}, {4, 3, 2, 1}});
    const Allocation x = efx_consistent_additive(inst, {0, 2});
    CHECK(x.bundles[1].empty());
    ItemSet joined = x.bundles[0];
    joined.insert(x.bundles[2].begin(), x.bundles[2].end());
    CHECK(joined == ItemSet{0, 1, 2, 3});
    CHECK_FALSE(strongly_envies(inst, x, 0, 2));
    CHECK_FALSE(strongly_envies(inst, x, 2, 0));
}
