#include "qssep/loop_polynomials.hpp"

#include "parallel.hpp"
#include "qssep/cumulants.hpp"
#include "qssep/schroeder.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace qssep {

Algorithm parse_algorithm(const std::string& name) {
    if (name == "trees") return Algorithm::trees;
    if (name == "cumulants") return Algorithm::cumulants;
    if (name == "exchange") return Algorithm::exchange;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::trees: return "trees";
        case Algorithm::cumulants: return "cumulants";
        case Algorithm::exchange: return "exchange";
    }
    return "?";
}

namespace {

// Corner owners of every prime tree with the given number of leaves.
const std::vector<std::vector<int>>& prime_tree_corners(int leaves) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(leaves);
    if (it == cache.end()) {
        std::vector<std::vector<int>> owners;
        for (const auto& t : enumerate_prime_trees(leaves)) owners.push_back(label_corners(t));
        it = cache.emplace(leaves, std::move(owners)).first;
    }
    return it->second;
}

void check_loop_size(const CyclicPermutation& sigma) {
    if (static_cast<int>(sigma.size()) > kMaxLoopSize) {
        throw std::out_of_range("loop polynomials are computed for cycles of length <= " +
                                std::to_string(kMaxLoopSize));
    }
}

void check_family_size(int n) {
    if (n < 1 || n > kMaxFamilySize) {
        throw std::out_of_range("cycle families are supported for 1 <= n <= " + std::to_string(kMaxFamilySize));
    }
}

}  // namespace

MultilinearPolynomial q_via_trees(const CyclicPermutation& sigma, int k) {
    check_loop_size(sigma);
    const int n = static_cast<int>(sigma.size());
    const auto orbit = sigma.orbit_from(k);
    MultilinearPolynomial total;
    std::map<int, int> least;
    for (const auto& owner : prime_tree_corners(n + 1)) {
        // Same computation as tree_monomial, on cached corner owners.
        least.clear();
        for (int c = 1; c <= n; ++c) {
            const int label = orbit[c % n];
            auto [it, inserted] = least.try_emplace(owner[c - 1], label);
            if (!inserted && label < it->second) it->second = label;
        }
        Monomial m;
        m.reserve(least.size());
        for (const auto& [vertex, label] : least) m.push_back(label);
        // -(prod of -x_i(v))
        total.add_term(std::move(m), least.size() % 2 ? 1 : -1);
    }
    return total;
}

MultilinearPolynomial q_via_trees(const CyclicPermutation& sigma) {
    return q_via_trees(sigma, sigma.word().front());
}

MultilinearPolynomial q_via_cumulants(const CyclicPermutation& sigma, int k) {
    check_loop_size(sigma);
    return symbolic_free_cumulant(sigma, k);
}

MultilinearPolynomial delta(const CyclicPermutation& sigma, int i) {
    const auto split = split_by_transposition(sigma, i);
    return multiply_disjoint(coefficient_of(q_via_trees(split.minus), i),
                             coefficient_of(q_via_trees(split.plus), i + 1));
}

MultilinearPolynomial exchange_step(const MultilinearPolynomial& q, const CyclicPermutation& sigma, int i) {
    const auto d = delta(sigma, i);
    const auto parts = decompose(q, i);
    return recompose(Decomposition{parts.a, parts.c + d, parts.b - d, parts.d}, i);
}

LoopFamily generate_all(int n) {
    check_family_size(n);
    const auto cycles = all_cycles(n);
    LoopFamily family;
    std::deque<CyclicPermutation> queue{cycles.front()};
    family.emplace(cycles.front(), q_via_trees(cycles.front()));
    while (!queue.empty()) {
        const CyclicPermutation sigma = queue.front();
        queue.pop_front();
        const auto& q = family.at(sigma);
        for (int i = 1; i < n; ++i) {
            auto tau = conjugate_by_adjacent(sigma, i);
            auto next = exchange_step(q, sigma, i);
            auto [it, inserted] = family.try_emplace(tau, next);
            if (inserted) {
                queue.push_back(tau);
            } else if (it->second != next) {
                throw std::logic_error("exchange walk reached (" + tau.to_string() +
                                       ") with two different polynomials");
            }
        }
    }
    if (family.size() != cycles.size()) {
        throw std::logic_error("exchange walk did not reach every cycle");
    }
    return family;
}

LoopFamily compute_family(int n, Algorithm algo, int jobs) {
    check_family_size(n);
    if (algo == Algorithm::exchange) return generate_all(n);
    const auto cycles = all_cycles(n);
    std::vector<MultilinearPolynomial> values(cycles.size());
    detail::parallel_for(cycles.size(), jobs, [&](std::size_t j) {
        values[j] = algo == Algorithm::trees ? q_via_trees(cycles[j], 1) : q_via_cumulants(cycles[j], 1);
    });
    LoopFamily family;
    for (std::size_t j = 0; j < cycles.size(); ++j) family.emplace(cycles[j], std::move(values[j]));
    return family;
}

std::size_t VerificationReport::failures() const {
    std::size_t count = 0;
    for (const auto& c : checks) count += c.passed ? 0 : 1;
    return count;
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.passed ? "PASS " : "FAIL ";
        out += c.condition + " sigma=" + c.sigma.to_string() + " i=" + std::to_string(c.i) + "\n";
    }
    out += "CHECKS=" + std::to_string(checks.size()) + " FAILURES=" + std::to_string(failures()) + "\n";
    return out;
}

namespace {

std::vector<CheckResult> check_cycle(int n, const CyclicPermutation& sigma, const LoopFamily& family) {
    std::vector<CheckResult> out;
    auto record = [&](const char* condition, int i, bool passed) {
        out.push_back(CheckResult{condition, sigma, i, passed});
    };
    const auto& q = family.at(sigma);

    bool multilinear = true;
    for (const auto& [m, c] : q.terms()) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] < 1 || m[j] > n || (j && m[j] == m[j - 1])) multilinear = false;
        }
    }
    record("multilinear", 0, multilinear);

    if (n == 1) record("base", 0, q == MultilinearPolynomial::variable(1));
    if (n == 2) {
        record("base", 0, q == MultilinearPolynomial::from_terms({{{1}, 1}, {{1, 2}, -1}}));
    }
    if (n >= 2) {
        bool has_x1 = !q.is_zero();
        for (const auto& [m, c] : q.terms()) has_x1 = has_x1 && !m.empty() && m.front() == 1;
        record("boundary", 0, has_x1 && substitute_unit(q, n).is_zero());
    }

    for (int i = 1; i < n; ++i) {
        const auto tau = conjugate_by_adjacent(sigma, i);
        const auto lhs = decompose(q, i);
        const auto rhs = decompose(family.at(tau), i);
        const auto d = delta(sigma, i);
        record("continuity", i, lhs.a == rhs.a && lhs.d == rhs.d && lhs.b + lhs.c == rhs.b + rhs.c);
        record("exchange", i, lhs.b - rhs.c == d && rhs.b - lhs.c == d);
        record("exchange-doubled", i, (lhs.b + rhs.b) - (lhs.c + rhs.c) == scale(d, 2));
    }
    return out;
}

}  // namespace

VerificationReport verify_family(int n, const LoopFamily& family, int jobs) {
    check_family_size(n);
    const auto cycles = all_cycles(n);
    for (const auto& sigma : cycles) {
        if (!family.count(sigma)) {
            throw std::invalid_argument("family has no polynomial for (" + sigma.to_string() + ")");
        }
    }
    std::vector<std::vector<CheckResult>> per_cycle(cycles.size());
    detail::parallel_for(cycles.size(), jobs,
                         [&](std::size_t j) { per_cycle[j] = check_cycle(n, cycles[j], family); });
    VerificationReport report{n, {}};
    for (auto& checks : per_cycle) {
        report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    }
    return report;
}

VerificationReport verify_axioms(int n, int jobs) {
    return verify_family(n, compute_family(n, Algorithm::trees, jobs), jobs);
}

std::vector<EquivalenceClass> equivalence_classes(const LoopFamily& family) {
    std::vector<EquivalenceClass> classes;
    // The family map is ordered by cycle, so each class's first member is its least cycle.
    for (const auto& [sigma, q] : family) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&q](const EquivalenceClass& c) { return c.polynomial == q; });
        if (it == classes.end()) {
            classes.push_back(EquivalenceClass{q, {sigma}});
        } else {
            it->cycles.push_back(sigma);
        }
    }
    return classes;
}

std::vector<EquivalenceClass> equivalence_classes(int n) {
    return equivalence_classes(compute_family(n, Algorithm::trees));
}

}  // namespace qssep
