#include "doctest.h"
#include "oracles.hpp"

#include "qssep/loop_polynomials.hpp"
#include "qssep/schroeder.hpp"

#include <numeric>
#include <random>

using namespace qssep;
using oracle::bracketed;
using oracle::poly;

namespace {

MultilinearPolynomial q(std::vector<int> word) { return q_via_trees(CyclicPermutation(std::move(word))); }

// Tree sum computed straight from tree_monomial over the filtered enumeration.
MultilinearPolynomial q_by_monomials(const CyclicPermutation& sigma, int k) {
    const int n = static_cast<int>(sigma.size());
    MultilinearPolynomial total;
    for (const auto& t : enumerate_trees(n + 1)) {
        if (!t.children().back().is_leaf()) continue;
        const auto m = tree_monomial(t, k, sigma);
        total.add_term(m.variables, -m.sign);
    }
    return total;
}

}  // namespace

TEST_CASE("base cases") {
    CHECK(q({1}) == MultilinearPolynomial::variable(1));
    CHECK(q({1, 2}) == poly({{{1}, 1}, {{1, 2}, -1}}));
    CHECK(q({1, 2, 3}) == poly({{{1}, 1}, {{1, 2}, -2}, {{1, 3}, -1}, {{1, 2, 3}, 2}}));
}

TEST_CASE("four-cycles in factored form") {
    CHECK(q({1, 2, 3, 4}) == bracketed(poly({{{}, 1}, {{2}, -3}, {{3}, -2}, {{2, 3}, 5}}), 4));
    CHECK(q({1, 3, 2, 4}) == bracketed(poly({{{}, 1}, {{2}, -4}, {{3}, -1}, {{2, 3}, 5}}), 4));
}

TEST_CASE("tree sum equals the sum of tree monomials") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sigma : all_cycles(n)) {
            for (int k = 1; k <= n; ++k) REQUIRE(q_via_trees(sigma, k) == q_by_monomials(sigma, k));
        }
    }
}

TEST_CASE("property: the polynomial does not depend on the starting index") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& sigma : all_cycles(n)) {
            const auto base = q_via_trees(sigma, 1);
            for (int k = 2; k <= n; ++k) REQUIRE(q_via_trees(sigma, k) == base);
        }
    }
}

TEST_CASE("property: inverse cycles share their polynomial") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& sigma : all_cycles(n)) REQUIRE(q_via_trees(sigma.inverse()) == q_via_trees(sigma));
    }
}

TEST_CASE("property: every polynomial factors as x_1 P (1 - x_n)") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& sigma : all_cycles(n)) {
            const auto qs = q_via_trees(sigma);
            const auto p = coefficient_of(qs, 1);
            const auto inner = p - multiply_disjoint(MultilinearPolynomial::variable(n), coefficient_of(p, n));
            REQUIRE(bracketed(inner, n) == qs);
        }
    }
}

TEST_CASE("arbitrary supports relabel the standard polynomial") {
    const auto on_ranks = q({1, 3, 2, 4});
    const auto shifted = q_via_trees(CyclicPermutation({2, 7, 5, 9}));
    CHECK(shifted == rename_variables(on_ranks, {{1, 2}, {2, 5}, {3, 7}, {4, 9}}));
}

TEST_CASE("cumulant and tree sums agree for every start") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& sigma : all_cycles(n)) {
            for (int k = 1; k <= n; ++k) REQUIRE(q_via_cumulants(sigma, k) == q_via_trees(sigma, k));
        }
    }
}

TEST_CASE("exchange from (1234) to (1324)") {
    const CyclicPermutation sigma({1, 2, 3, 4});
    const auto d = delta(sigma, 2);
    CHECK(d == poly({{{1}, -2}, {{1, 4}, 2}}));
    CHECK(exchange_step(q({1, 2, 3, 4}), sigma, 2) == q({1, 3, 2, 4}));
    const auto parts = decompose(q({1, 2, 3, 4}), 2);
    CHECK(parts.a == poly({{{1}, 1}, {{1, 4}, -1}}));
}

TEST_CASE("property: one exchange step reaches the conjugated polynomial") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& sigma : all_cycles(n)) {
            const auto qs = q_via_trees(sigma);
            for (int i = 1; i < n; ++i) {
                REQUIRE(exchange_step(qs, sigma, i) == q_via_trees(conjugate_by_adjacent(sigma, i)));
            }
        }
    }
}

TEST_CASE("families agree across algorithms and thread counts") {
    for (int n = 1; n <= 5; ++n) {
        const auto trees = compute_family(n, Algorithm::trees);
        CHECK(trees.size() == all_cycles(n).size());
        CHECK(compute_family(n, Algorithm::cumulants) == trees);
        CHECK(compute_family(n, Algorithm::exchange) == trees);
        CHECK(generate_all(n) == trees);
        CHECK(compute_family(n, Algorithm::trees, 3) == trees);
    }
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(q_via_trees(CyclicPermutation({1, 2, 3, 4, 5, 6, 7, 8, 9})), std::out_of_range);
    CHECK_THROWS_AS(compute_family(8, Algorithm::trees), std::out_of_range);
    CHECK_THROWS_AS(compute_family(0, Algorithm::trees), std::out_of_range);
    CHECK_THROWS_AS(parse_algorithm("magic"), std::invalid_argument);
    CHECK(parse_algorithm("exchange") == Algorithm::exchange);
    CHECK(to_string(Algorithm::cumulants) == "cumulants");
}

TEST_CASE("the verifier accepts the true family") {
    for (int n = 1; n <= 5; ++n) {
        const auto report = verify_axioms(n);
        CHECK(report.passed());
        CHECK(report.n == n);
    }
    const auto report = verify_axioms(3);
    const auto text = report.to_text();
    CHECK(text.find("PASS multilinear sigma=1,2,3 i=0\n") != std::string::npos);
    CHECK(text.find("PASS exchange sigma=1,3,2 i=2\n") != std::string::npos);
    CHECK(text.substr(text.rfind("CHECKS=")) == "CHECKS=" + std::to_string(report.checks.size()) + " FAILURES=0\n");
}

TEST_CASE("property: the verifier catches single-coefficient perturbations") {
    std::mt19937 rng(31);
    for (int n = 1; n <= 5; ++n) {
        const auto family = compute_family(n, Algorithm::trees);
        const auto cycles = all_cycles(n);
        std::uniform_int_distribution<std::size_t> pick_cycle(0, cycles.size() - 1);
        std::uniform_int_distribution<unsigned> pick_mask(0, (1u << n) - 1);
        std::uniform_int_distribution<int> pick_delta(1, 50);
        for (int trial = 0; trial < 40; ++trial) {
            auto broken = family;
            const auto& sigma = cycles[pick_cycle(rng)];
            Monomial m;
            const unsigned mask = pick_mask(rng);
            for (int v = 0; v < n; ++v) {
                if (mask & (1u << v)) m.push_back(v + 1);
            }
            broken.at(sigma).add_term(m, trial % 2 ? pick_delta(rng) : -pick_delta(rng));
            REQUIRE_FALSE(verify_family(n, broken).passed());
        }
    }
    auto missing = compute_family(3, Algorithm::trees);
    missing.erase(missing.begin());
    CHECK_THROWS_AS(verify_family(3, missing), std::invalid_argument);
}

TEST_CASE("equivalence classes") {
    const auto four = equivalence_classes(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0].cycles.size() == 4);
    CHECK(four[1].cycles.size() == 2);
    CHECK(four[1].cycles.front() == CyclicPermutation({1, 3, 2, 4}));
    CHECK(four[1].polynomial == q({1, 3, 2, 4}));

    const auto five = equivalence_classes(5);
    CHECK(five.size() == 4);
    std::size_t total = 0;
    for (const auto& cls : five) {
        total += cls.cycles.size();
        for (const auto& sigma : cls.cycles) CHECK(q_via_trees(sigma) == cls.polynomial);
        CHECK(std::is_sorted(cls.cycles.begin(), cls.cycles.end()));
    }
    CHECK(total == 24);
}

TEST_CASE("coefficient mass counts prime trees") {
    const std::vector<int> expected{1, 2, 6, 22, 90, 394};
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> word(n);
        std::iota(word.begin(), word.end(), 1);
        CHECK(abs_coeff_sum(q(word)) == expected[n - 1]);
        for (const auto& sigma : all_cycles(n)) {
            REQUIRE(abs_coeff_sum(q_via_trees(sigma)) == expected[n - 1]);
        }
    }
}
