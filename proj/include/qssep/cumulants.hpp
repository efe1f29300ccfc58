#pragma once

// Free cumulants over NC(n), symbolically (loop polynomials) and for the
// indicator family 1_[0,u] whose joint moments are minima; classical cumulants
// over all set partitions.

#include "qssep/combinatorics.hpp"
#include "qssep/polynomial.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qssep {

inline constexpr int kMaxRecursiveCumulantSize = 8;

/// -sum over pi in NC(n) of prod_{blocks p} (-x_{i(p)}) * |mu(pi)|, position j carrying
/// s^j(k) (j < n) and position n carrying k; i(p) is the least label in p.
/// Throws std::out_of_range if k is outside the support.
MultilinearPolynomial symbolic_free_cumulant(const CyclicPermutation& sigma, int k);

/// kappa_n(1_[0,u_1], ..., 1_[0,u_n]) = sum_pi prod_blocks min(u_block) * mu(pi).
/// Throws std::invalid_argument unless every u_j lies in [0, 1].
Rational numeric_free_cumulant_min(std::span<const Rational> u);

/// Same quantity, solving the moment-cumulant relation for kappa at 1_n recursively.
Rational numeric_free_cumulant_recursive(std::span<const Rational> u);

/// Moment functional: E[a_{j_1} ... a_{j_m}] for sorted positions j_1 < ... < j_m in 1..n.
using MomentFunctional = std::function<Rational(const std::vector<int>&)>;

/// C_n = sum over set partitions pi of E_pi * (-1)^{|pi|-1} (|pi|-1)!.
Rational classical_cumulant(const MomentFunctional& moment, int n);

/// prod_{p in K(pi)} (-1)^{|p|-1} == -prod_{p in pi} (-1)
bool sign_identity_check(const NonCrossingPartition& pi);

/// NC(n) paired with |mu(pi)|; computed once per n.
const std::vector<std::pair<NonCrossingPartition, BigInt>>& nc_with_abs_mobius(int n);

}  // namespace qssep
