#include "doctest.h"
#include "oracles.hpp"

#include "qssep/combinatorics.hpp"

#include <random>
#include <set>

using namespace qssep;

TEST_CASE("cycles canonicalize to their least entry") {
    CHECK(canonicalize_cycle({3, 2, 4, 1}).word() == std::vector<int>{1, 3, 2, 4});
    CHECK(CyclicPermutation({4, 1, 3}).word() == std::vector<int>{1, 3, 4});
    CHECK(parse_cycle("3,2,4,1") == CyclicPermutation({1, 3, 2, 4}));
    CHECK(parse_cycle(" 2, 1 ").to_string() == "1,2");
    CHECK_THROWS_AS(CyclicPermutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPermutation({}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPermutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycle("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycle("1,a"), std::invalid_argument);
}

TEST_CASE("cycle evaluation and orbits") {
    const CyclicPermutation s({1, 3, 2, 4});
    CHECK(s(1) == 3);
    CHECK(s(3) == 2);
    CHECK(s(4) == 1);
    CHECK(s.orbit_from(2) == std::vector<int>{2, 4, 1, 3});
    CHECK(s.inverse().word() == std::vector<int>{1, 4, 2, 3});
    CHECK(s.support() == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(s(5), std::out_of_range);
    CHECK(s.relabeled({{1, 5}, {4, 7}}).word() == std::vector<int>{2, 7, 5, 3});
}

TEST_CASE("conjugation by an adjacent transposition swaps two labels") {
    CHECK(conjugate_by_adjacent(CyclicPermutation({1, 2, 3}), 1) == CyclicPermutation({1, 3, 2}));
    CHECK(conjugate_by_adjacent(CyclicPermutation({1, 2, 3, 4}), 2) == CyclicPermutation({1, 3, 2, 4}));
    CHECK(conjugate_by_adjacent(CyclicPermutation({1, 3, 2, 4}), 3) == CyclicPermutation({1, 4, 2, 3}));
    CHECK_THROWS_AS(conjugate_by_adjacent(CyclicPermutation({1, 2, 3}), 3), std::out_of_range);
}

TEST_CASE("splitting by s_i composes as x -> s_i(sigma(x))") {
    auto split = split_by_transposition(CyclicPermutation({1, 2, 3, 4}), 2);
    CHECK(split.minus == CyclicPermutation({2}));
    CHECK(split.plus == CyclicPermutation({1, 3, 4}));

    split = split_by_transposition(CyclicPermutation({1, 2, 3}), 1);
    CHECK(split.minus == CyclicPermutation({1}));
    CHECK(split.plus == CyclicPermutation({2, 3}));

    CHECK_THROWS_AS(split_by_transposition(CyclicPermutation({1, 2}), 2), std::out_of_range);
}

TEST_CASE("property: split pieces partition the support and recombine") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 7; ++n) {
        for (const auto& sigma : all_cycles(n)) {
            for (int i = 1; i < n; ++i) {
                const auto split = split_by_transposition(sigma, i);
                REQUIRE(split.minus.contains(i));
                REQUIRE(split.plus.contains(i + 1));
                REQUIRE(split.minus.size() + split.plus.size() == static_cast<std::size_t>(n));
                // s_i . sigma sends x to the next entry of its piece.
                for (const auto* piece : {&split.minus, &split.plus}) {
                    for (int x : piece->word()) {
                        int y = sigma(x);
                        y = y == i ? i + 1 : y == i + 1 ? i : y;
                        REQUIRE((*piece)(x) == y);
                    }
                }
            }
        }
    }
}

TEST_CASE("all_cycles lists (n-1)! distinct sorted cycles") {
    for (int n = 1; n <= 7; ++n) {
        const auto cycles = all_cycles(n);
        CHECK(BigInt(cycles.size()) == factorial(n - 1));
        CHECK(std::is_sorted(cycles.begin(), cycles.end()));
        CHECK(std::set<CyclicPermutation>(cycles.begin(), cycles.end()).size() == cycles.size());
        for (const auto& c : cycles) CHECK(c.word().front() == 1);
    }
}

TEST_CASE("set partitions validate coverage") {
    const SetPartition p(4, {{3, 1, 4}, {2}});
    CHECK(p.to_string() == "{1,3,4},{2}");
    CHECK(p.block_of(4) == 0);
    CHECK(p.block_of(2) == 1);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition(2, {{1, 2, 3}}), std::invalid_argument);
    CHECK(SetPartition(4, {{1}, {2}, {3, 4}}).refines(p));
    CHECK_FALSE(SetPartition(4, {{1, 2}, {3}, {4}}).refines(p));
    CHECK_FALSE(p.refines(SetPartition(4, {{1}, {2}, {3, 4}})));
    CHECK(SetPartition(4, {{1, 4}, {3}, {2}}).refines(p));
}

TEST_CASE("non-crossing check") {
    CHECK(is_noncrossing(SetPartition(4, {{1, 3, 4}, {2}})));
    CHECK_FALSE(is_noncrossing(SetPartition(4, {{1, 3}, {2, 4}})));
    CHECK_THROWS_AS(NonCrossingPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("NC(n) matches the crossing filter over all set partitions") {
    for (int n = 1; n <= 8; ++n) {
        const auto nc = enumerate_nc(n);
        const auto expected = oracle::brute_force_nc(n);
        REQUIRE(nc.size() == expected.size());
        for (std::size_t j = 0; j < nc.size(); ++j) CHECK(nc[j].partition() == expected[j]);
        CHECK(BigInt(nc.size()) == oracle::catalan_binomial(n));
    }
    CHECK(enumerate_nc(12).size() == 208012);
    CHECK_THROWS_AS(enumerate_nc(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_nc(13), std::out_of_range);
}

TEST_CASE("set partitions are counted by Bell numbers") {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_set_partitions(n).size() == bell[n]);
    CHECK(enumerate_set_partitions(6).size() == oracle::restricted_growth_strings(6).size());
}

TEST_CASE("Kreweras complement on eight points") {
    const NonCrossingPartition pi(8, {{1, 3, 4}, {2}, {5, 6}, {7}, {8}});
    CHECK(kreweras(pi) == NonCrossingPartition(8, {{1, 5, 7, 8}, {2, 3}, {4}, {6}}));
    CHECK(kreweras(NonCrossingPartition::one_block(5)) == NonCrossingPartition::singletons(5));
    CHECK(kreweras(NonCrossingPartition::singletons(5)) == NonCrossingPartition::one_block(5));
}

TEST_CASE("Kreweras complement agrees with the interleaved-circle oracle") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : enumerate_nc(n)) {
            REQUIRE(kreweras(pi).partition() == oracle::brute_force_kreweras(pi.partition()));
        }
    }
}

TEST_CASE("property: Kreweras is an order-reversing bijection with |p| + |K(p)| = n + 1") {
    for (int n = 1; n <= 7; ++n) {
        const auto nc = enumerate_nc(n);
        std::set<NonCrossingPartition> images;
        for (const auto& p : nc) {
            const auto k = kreweras(p);
            CHECK(p.block_count() + k.block_count() == static_cast<std::size_t>(n + 1));
            images.insert(k);
        }
        CHECK(images.size() == nc.size());
    }
    std::mt19937 rng(5);
    for (int n = 2; n <= 8; ++n) {
        const auto nc = enumerate_nc(n);
        std::uniform_int_distribution<std::size_t> pick(0, nc.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& a = nc[pick(rng)];
            const auto& b = nc[pick(rng)];
            if (a.partition().refines(b.partition())) {
                CHECK(kreweras(b).partition().refines(kreweras(a).partition()));
            }
        }
    }
}

TEST_CASE("Kreweras applied twice rotates by one step") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : enumerate_nc(n)) REQUIRE(kreweras(kreweras(p)) == rotate(p, 1));
    }
    const NonCrossingPartition p(5, {{1, 2}, {3, 5}, {4}});
    CHECK(rotate(p, 1) == NonCrossingPartition(5, {{2, 3}, {4, 1}, {5}}));
    CHECK(rotate(p, -1) == NonCrossingPartition(5, {{5, 1}, {2, 4}, {3}}));
}

TEST_CASE("Mobius values from Catalan products") {
    CHECK(mobius_nc(NonCrossingPartition::singletons(1)) == 1);
    CHECK(mobius_nc(NonCrossingPartition::singletons(2)) == -1);
    CHECK(mobius_nc(NonCrossingPartition::singletons(3)) == 2);
    CHECK(mobius_nc(NonCrossingPartition::singletons(4)) == -5);
    CHECK(mobius_nc(NonCrossingPartition::one_block(4)) == 1);
    CHECK(mobius_nc(NonCrossingPartition(3, {{1, 3}, {2}})) == -1);
    CHECK(mobius_nc(NonCrossingPartition(4, {{1, 4}, {2}, {3}})) == 2);
}

TEST_CASE("Mobius values agree with lattice inversion") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& [q, mu] : mobius_table_via_lattice(n)) REQUIRE(mobius_nc(q) == mu);
    }
    CHECK(mobius_via_lattice(NonCrossingPartition::singletons(6)) == -42);
    CHECK_THROWS_AS(mobius_table_via_lattice(9), std::out_of_range);
}

TEST_CASE("property: Mobius values sum to zero over NC(n) for n >= 2") {
    for (int n = 2; n <= 9; ++n) {
        BigInt sum = 0;
        for (const auto& p : enumerate_nc(n)) sum += mobius_nc(p);
        CHECK(sum == 0);
    }
}

TEST_CASE("Catalan and small Schroeder numbers") {
    for (int n = 0; n <= 25; ++n) CHECK(catalan(n) == oracle::catalan_binomial(n));
    const std::vector<int> expected{1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049};
    for (int n = 1; n <= 10; ++n) CHECK(small_schroeder(n) == expected[n - 1]);
    const auto counts = oracle::schroeder_counts(20);
    for (int n = 1; n <= 20; ++n) CHECK(small_schroeder(n) == counts[n]);
    CHECK_THROWS_AS(catalan(-1), std::out_of_range);
    CHECK_THROWS_AS(small_schroeder(0), std::out_of_range);
}
