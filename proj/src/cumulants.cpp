#include "qssep/cumulants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qssep {

const std::vector<std::pair<NonCrossingPartition, BigInt>>& nc_with_abs_mobius(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::pair<NonCrossingPartition, BigInt>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::pair<NonCrossingPartition, BigInt>> table;
        for (auto& pi : enumerate_nc(n)) {
            BigInt mu = abs(mobius_nc(pi));
            table.emplace_back(std::move(pi), std::move(mu));
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

MultilinearPolynomial symbolic_free_cumulant(const CyclicPermutation& sigma, int k) {
    const int n = static_cast<int>(sigma.size());
    const auto orbit = sigma.orbit_from(k);
    MultilinearPolynomial total;
    for (const auto& [pi, weight] : nc_with_abs_mobius(n)) {
        Monomial m;
        for (const auto& block : pi.blocks()) {
            int least = orbit[block.front() % n];
            for (int position : block) least = std::min(least, orbit[position % n]);
            m.push_back(least);
        }
        // -(prod of -x) = (-1)^{|pi|+1} prod x
        const bool negative = pi.block_count() % 2 == 0;
        total.add_term(std::move(m), negative ? BigInt(-weight) : weight);
    }
    return total;
}

namespace {

void check_unit_interval(std::span<const Rational> u) {
    if (u.empty()) {
        throw std::invalid_argument("free cumulant needs at least one argument");
    }
    if (static_cast<int>(u.size()) > kMaxNonCrossingSize) {
        throw std::out_of_range("free cumulant supports at most " + std::to_string(kMaxNonCrossingSize) +
                                " arguments");
    }
    for (const auto& x : u) {
        if (x < 0 || x > 1) {
            throw std::invalid_argument("argument " + to_string(x) + " lies outside [0, 1]");
        }
    }
}

}  // namespace

Rational numeric_free_cumulant_min(std::span<const Rational> u) {
    check_unit_interval(u);
    const int n = static_cast<int>(u.size());
    Rational total = 0;
    for (const auto& pi : enumerate_nc(n)) {
        Rational product = 1;
        for (const auto& block : pi.blocks()) {
            Rational least = u[block.front() - 1];
            for (int position : block) least = std::min(least, u[position - 1]);
            product *= least;
        }
        total += product * Rational(mobius_nc(pi));
    }
    return total;
}

Rational numeric_free_cumulant_recursive(std::span<const Rational> u) {
    check_unit_interval(u);
    const int n = static_cast<int>(u.size());
    if (n > kMaxRecursiveCumulantSize) {
        throw std::out_of_range("recursive free cumulant supports at most " +
                                std::to_string(kMaxRecursiveCumulantSize) + " arguments");
    }
    // kappa of the sub-tuple picked by a position mask, solved from
    // phi(sub-tuple) = sum over NC of products of kappa on blocks.
    std::map<unsigned, Rational> memo;
    auto kappa = [&](auto&& self, unsigned mask) -> Rational {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::vector<int> positions;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) positions.push_back(j);
        }
        Rational moment = u[positions.front()];
        for (int j : positions) moment = std::min(moment, u[j]);
        Rational value = moment;
        const int m = static_cast<int>(positions.size());
        if (m > 1) {
            for (const auto& pi : enumerate_nc(m)) {
                if (pi.block_count() == 1) continue;
                Rational product = 1;
                for (const auto& block : pi.blocks()) {
                    unsigned sub = 0;
                    for (int local : block) sub |= 1u << positions[local - 1];
                    product *= self(self, sub);
                }
                value -= product;
            }
        }
        memo.emplace(mask, value);
        return value;
    };
    return kappa(kappa, (1u << n) - 1);
}

Rational classical_cumulant(const MomentFunctional& moment, int n) {
    Rational total = 0;
    for (const auto& pi : enumerate_set_partitions(n)) {
        Rational product = 1;
        for (const auto& block : pi.blocks()) product *= moment(block);
        const int blocks = static_cast<int>(pi.block_count());
        Rational weight(factorial(blocks - 1));
        if ((blocks - 1) % 2) weight = -weight;
        total += product * weight;
    }
    return total;
}

bool sign_identity_check(const NonCrossingPartition& pi) {
    int lhs = 1;
    const auto complement = kreweras(pi);
    for (const auto& block : complement.blocks()) {
        if ((block.size() - 1) % 2) lhs = -lhs;
    }
    const int rhs = pi.block_count() % 2 ? 1 : -1;
    return lhs == rhs;
}

}  // namespace qssep
