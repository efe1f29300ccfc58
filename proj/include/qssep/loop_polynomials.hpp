#pragma once

// Loop polynomials Q_sigma: prime-tree sum, free-cumulant sum and propagation
// through the exchange relation, plus a verifier for the defining axioms.

#include "qssep/combinatorics.hpp"
#include "qssep/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace qssep {

inline constexpr int kMaxLoopSize = 8;
inline constexpr int kMaxFamilySize = 7;

enum class Algorithm { trees, cumulants, exchange };

/// Throws std::invalid_argument on an unknown name.
Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algo);

using LoopFamily = std::map<CyclicPermutation, MultilinearPolynomial>;

/// -sum over prime trees t with n+1 leaves of x^{t,k,sigma}. Works on any support.
MultilinearPolynomial q_via_trees(const CyclicPermutation& sigma, int k);
MultilinearPolynomial q_via_trees(const CyclicPermutation& sigma);

MultilinearPolynomial q_via_cumulants(const CyclicPermutation& sigma, int k);

/// ([x_i] Q_{sigma-}) * ([x_{i+1}] Q_{sigma+}) for the two cycles of s_i sigma.
MultilinearPolynomial delta(const CyclicPermutation& sigma, int i);

/// Q_{s_i sigma s_i} from q = Q_sigma:  A + x_i (C + Delta) + x_{i+1} (B - Delta) + x_i x_{i+1} D.
MultilinearPolynomial exchange_step(const MultilinearPolynomial& q, const CyclicPermutation& sigma, int i);

/// Q for all cycles of length n by a breadth-first conjugation walk from (1 2 ... n),
/// seeded with q_via_trees. Throws std::logic_error if two walk paths disagree.
LoopFamily generate_all(int n);

/// Q for all cycles of length n with the given algorithm (k = 1 for the direct ones).
/// jobs > 1 spreads the direct algorithms over worker threads; the result does not depend on it.
LoopFamily compute_family(int n, Algorithm algo, int jobs = 1);

struct CheckResult {
    std::string condition;  // multilinear, base, boundary, continuity, exchange, exchange-doubled
    CyclicPermutation sigma;
    int i = 0;              // 0 for checks that do not depend on an adjacent pair
    bool passed = false;
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckResult> checks;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
    /// One "PASS|FAIL <condition> sigma=<word> i=<int>" line per check, then "CHECKS=<t> FAILURES=<f>".
    std::string to_text() const;
};

/// Checks every loop-polynomial axiom on a family of all cycles of length n.
/// Delta is computed independently from q_via_trees on the sub-cycles.
VerificationReport verify_family(int n, const LoopFamily& family, int jobs = 1);

/// verify_family on the prime-tree family.
VerificationReport verify_axioms(int n, int jobs = 1);

struct EquivalenceClass {
    MultilinearPolynomial polynomial;
    std::vector<CyclicPermutation> cycles;  // sorted
};

/// Cycles grouped by identical polynomial; classes ordered by their least cycle.
std::vector<EquivalenceClass> equivalence_classes(const LoopFamily& family);
std::vector<EquivalenceClass> equivalence_classes(int n);

}  // namespace qssep
