#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphfair/envy.hpp"
#include "graphfair/errors.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/io.hpp"
#include "graphfair/model.hpp"
#include "graphfair/rational.hpp"
#include "helpers.hpp"

using namespace graphfair;
using namespace graphfair::testing;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-2/5") == Rational(-2, 5));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-8, 4)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(parse_rational("123456789123456789123456789/2")) == "123456789123456789123456789/2");
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1 /2"), ParseError);
}

TEST_CASE("instance construction validates its input") {
    CHECK_THROWS_AS(Instance::create({{1, ItemKind::Good}}, {AdditiveValuation{{Rational(1)}}}), BadSize);
    // good valued negatively
    CHECK_THROWS_AS(goods_instance({{-1, 2}}), BadSize);
    // chore valued positively
    CHECK_THROWS_AS(chores_instance({{3}}), BadSize);
    // wrong number of values
    CHECK_THROWS_AS(Instance::create({{0, ItemKind::Good}}, {AdditiveValuation{{Rational(1), Rational(2)}}}),
                    BadSize);
    // lexicographic priority must be a permutation
    CHECK_THROWS_AS(lex_instance({ItemKind::Good, ItemKind::Good}, {{0, 0}}), BadSize);
    CHECK_THROWS_AS(lex_instance({ItemKind::Good, ItemKind::Good}, {{0}}), BadSize);

    const Instance ok = goods_instance({{1, 2, 3}, {0, 0, 0}});
    CHECK(ok.agent_count() == 2);
    CHECK(ok.item_count() == 3);
    CHECK(ok.goods_only());
    CHECK_FALSE(ok.chores_only());
    CHECK(ok.all_additive());
    CHECK(ok.all_numeric());
}

TEST_CASE("table valuations must be complete and monotone") {
    std::vector<Item> items{{0, ItemKind::Good}, {1, ItemKind::Good}};
    // v({}) = 0, v({0}) = 2, v({1}) = 3, v({0,1}) = 4: monotone, fine.
    TableValuation good{{Rational(0), Rational(2), Rational(3), Rational(4)}};
    CHECK_NOTHROW(Instance::create(items, {good}));
    // v({0,1}) < v({0}) breaks goods monotonicity.
    TableValuation bad{{Rational(0), Rational(2), Rational(3), Rational(1)}};
    CHECK_THROWS_AS(Instance::create(items, {Valuation(bad)}), BadSize);
    // wrong table size
    TableValuation incomplete{{Rational(0), Rational(2)}};
    CHECK_THROWS_AS(Instance::create(items, {Valuation(incomplete)}), BadSize);
}

TEST_CASE("bundle values") {
    const Instance inst = three_agent_path_fixture();
    CHECK(bundle_value(inst, 1, {4, 5}) == Rational(2));
    CHECK(bundle_value(inst, 0, {0, 1}) == Rational(10));
    CHECK(bundle_value(inst, 2, {}) == Rational(0));

    const Instance lex = lex_instance({ItemKind::Good, ItemKind::Good}, {{1, 0}});
    CHECK_THROWS_AS(bundle_value(lex, 0, {0}), LexicographicNotNumeric);
}

TEST_CASE("bundle value does not depend on summation order") {
    const Instance inst = goods_instance({{7, 11, 3, 5, 2, 13, 1, 9}});
    ItemSet all{0, 1, 2, 3, 4, 5, 6, 7};
    Rational forward = 0;
    for (int g : all) forward += inst.item_value(0, g);
    Rational backward = 0;
    for (auto it = all.rbegin(); it != all.rend(); ++it) backward += inst.item_value(0, *it);
    CHECK(bundle_value(inst, 0, all) == forward);
    CHECK(forward == backward);
}

TEST_CASE("numeric preference is strict value comparison") {
    const Instance inst = goods_instance({{5, 3, 1}});
    CHECK(prefers(inst, 0, {0}, {1}));
    CHECK_FALSE(prefers(inst, 0, {1}, {0}));
    CHECK_FALSE(prefers(inst, 0, {1, 2}, {0}));  // 4 vs 5
    CHECK(prefers(inst, 0, {0}, {1, 2}));
    CHECK_FALSE(prefers(inst, 0, {1, 2}, {0, 2}));  // 4 vs 6
    CHECK(prefers(inst, 0, {0}, {2}));
    CHECK_FALSE(prefers(inst, 0, {1}, {1}));
}

TEST_CASE("lexicographic preference walks the priority list") {
    // priority: g2 > g0 > g1, all goods
    const Instance inst = lex_instance({ItemKind::Good, ItemKind::Good, ItemKind::Good}, {{2, 0, 1}});
    CHECK(prefers(inst, 0, {2}, {0, 1}));
    CHECK(prefers(inst, 0, {0}, {1}));
    CHECK(prefers(inst, 0, {2, 1}, {2}));  // g2 in both, g0 in neither, g1 decides
    CHECK_FALSE(prefers(inst, 0, {1}, {1}));

    // c0 is a chore with top priority: any bundle avoiding it wins
    const Instance mixed = lex_instance({ItemKind::Chore, ItemKind::Good}, {{0, 1}});
    CHECK(prefers(mixed, 0, {1}, {0, 1}));
    CHECK(prefers(mixed, 0, {}, {0}));
    CHECK_FALSE(prefers(mixed, 0, {0, 1}, {1}));
}

TEST_CASE("envy and strong envy on the shared fixture") {
    const Instance inst = three_agent_path_fixture();
    const Allocation x = alloc({{0, 1}, {4, 5}, {2, 3}});
    CHECK(envy_amount(inst, x, 1, 0) == Rational(6));
    CHECK(strong_envy_amount(inst, x, 1, 0) == Rational(6));
    CHECK(strongly_envies(inst, x, 1, 0));
    CHECK(envy_amount(inst, x, 0, 1) == Rational(0));
    CHECK(strong_envy_amount(inst, x, 2, 1) == Rational(0));
    CHECK_FALSE(is_g_efx(inst, x, make_path(3)));
    // The same bundles are fine when the envious pair is not connected.
    CHECK(is_g_efx(inst, x, Graph(3, {{0, 2}})));
}

TEST_CASE("strong envy never exceeds envy on goods") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Instance inst = gen_random_instance(3, 5, 20, KindMix::Goods, seed);
        for_each_allocation(3, 5, [&](const Allocation& x) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    CHECK(strong_envy_amount(inst, x, i, j) <= envy_amount(inst, x, i, j));
                }
            }
        });
    }
}

TEST_CASE("singleton bundles cannot be strongly envied for goods") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Instance inst = gen_random_instance(2, 4, 15, KindMix::Goods, seed);
        for_each_allocation(2, 4, [&](const Allocation& x) {
            if (x.bundles[1].size() <= 1) {
                CHECK(strong_envy_amount(inst, x, 0, 1) == Rational(0));
                CHECK_FALSE(strongly_envies(inst, x, 0, 1));
            }
        });
    }
}

TEST_CASE("preference-based strong envy matches the numeric margin") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const Instance inst = gen_random_instance(3, 4, 12, KindMix::Mixed, seed);
        for_each_allocation(3, 4, [&](const Allocation& x) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    CHECK(strongly_envies(inst, x, i, j) == (strong_envy_amount(inst, x, i, j) > 0));
                    CHECK(strongly_envies(inst, x, i, j) == oracle_strong_envy(inst, x, i, j));
                }
            }
        });
    }
}

TEST_CASE("removing edges preserves graph fairness") {
    const Instance inst = gen_random_instance(4, 5, 10, KindMix::Goods, 7);
    const Graph full = make_complete(4);
    int seen = 0;
    for_each_allocation(4, 5, [&](const Allocation& x) {
        if (!is_g_efx(inst, x, full)) return;
        ++seen;
        for (auto edge : full.edges()) {
            std::vector<std::pair<int, int>> rest;
            for (auto e : full.edges()) {
                if (e != edge) rest.push_back(e);
            }
            CHECK(is_g_efx(inst, x, Graph(4, rest)));
        }
    });
    CHECK(seen > 0);
}

TEST_CASE("consistency is the absence of opposing strict preferences") {
    const Instance fixture = three_agent_path_fixture();
    // ties on one side never oppose a strict preference on the other
    CHECK(are_consistent(fixture, {0, 2}));
    CHECK(are_consistent(fixture, {0}));
    // 0 ranks g0 over g1, 1 ranks g1 over g0
    const Instance opposed = goods_instance({{5, 1}, {1, 5}});
    CHECK_FALSE(are_consistent(opposed, {0, 1}));
    // scaling does not matter
    const Instance scaled = goods_instance({{4, 2, 0}, {8, 4, 0}});
    CHECK(are_consistent(scaled, {0, 1}));

    const Instance lex = lex_instance({ItemKind::Good}, {{0}});
    CHECK_THROWS_AS(are_consistent(lex, {0}), NotAdditive);
}

TEST_CASE("identical valuation detection") {
    const Instance inst = goods_instance({{1, 2}, {1, 2}, {2, 1}});
    CHECK(valuations_identical(inst, 0, 1));
    CHECK_FALSE(valuations_identical(inst, 0, 2));
}

TEST_CASE("envy report fills only edges when a graph is given") {
    const Instance inst = three_agent_path_fixture();
    const Allocation x = alloc({{0, 1}, {4, 5}, {2, 3}});
    const Graph path = make_path(3);
    const EnvyReport full = envy_report(inst, x);
    const EnvyReport edges = envy_report(inst, x, &path);
    CHECK(full.envy[1][0] == Rational(6));
    CHECK(full.strong[1][0] == Rational(6));
    CHECK(edges.envy[1][0] == Rational(6));
    for (int i = 0; i < 3; ++i) CHECK(full.envy[i][i] == Rational(0));
    // 0-2 is not a path edge
    CHECK(edges.envy[2][0] == Rational(0));
    CHECK(full.envy[2][0] == bundle_value(inst, 2, {0, 1}) - bundle_value(inst, 2, {2, 3}));
}

TEST_CASE("partition check catches missing and duplicated items") {
    CHECK(alloc({{0, 1}, {2}}).is_partition_of(3));
    CHECK_FALSE(alloc({{0, 1}, {}}).is_partition_of(3));
    CHECK_FALSE(alloc({{0, 1}, {1, 2}}).is_partition_of(3));
}
