#pragma once

// Exact multilinear polynomials with big-integer coefficients.

#include "qssep/numbers.hpp"

#include <map>
#include <string>
#include <vector>

namespace qssep {

/// Squarefree monomial as the sorted list of its variable indices; {} is the constant monomial.
using Monomial = std::vector<int>;

class MultilinearPolynomial {
public:
    using TermMap = std::map<Monomial, BigInt>;

    MultilinearPolynomial() = default;

    static MultilinearPolynomial constant(const BigInt& c);
    static MultilinearPolynomial variable(int index);
    /// Builds from (monomial, coefficient) pairs; monomials are sorted and must be squarefree.
    static MultilinearPolynomial from_terms(const std::vector<std::pair<Monomial, BigInt>>& terms);

    /// Adds c * m. Throws std::invalid_argument for a non-squarefree or non-positive index.
    void add_term(Monomial m, const BigInt& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Monomial& m) const;
    /// Sorted indices of variables occurring in some term.
    std::vector<int> variables() const;
    bool depends_on(int index) const;

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& other);
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& other);

    friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) {
        return a += b;
    }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) {
        return a -= b;
    }
    friend MultilinearPolynomial operator-(const MultilinearPolynomial& a);
    friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

private:
    TermMap terms_;
};

MultilinearPolynomial add(const MultilinearPolynomial& p, const MultilinearPolynomial& q);
MultilinearPolynomial subtract(const MultilinearPolynomial& p, const MultilinearPolynomial& q);
MultilinearPolynomial negate(const MultilinearPolynomial& p);
MultilinearPolynomial scale(const MultilinearPolynomial& p, const BigInt& c);

/// Product of polynomials in disjoint variable sets. Throws std::domain_error on overlap.
MultilinearPolynomial multiply_disjoint(const MultilinearPolynomial& p, const MultilinearPolynomial& q);

/// [x_i]p, a polynomial in the remaining variables.
MultilinearPolynomial coefficient_of(const MultilinearPolynomial& p, int i);

/// p with x_i set to 1.
MultilinearPolynomial substitute_unit(const MultilinearPolynomial& p, int i);

/// p with variable indices renamed through the map; must stay squarefree.
MultilinearPolynomial rename_variables(const MultilinearPolynomial& p, const std::map<int, int>& rename);

/// p = A + x_i B + x_{i+1} C + x_i x_{i+1} D with A..D free of x_i, x_{i+1}.
struct Decomposition {
    MultilinearPolynomial a, b, c, d;
};
Decomposition decompose(const MultilinearPolynomial& p, int i);
MultilinearPolynomial recompose(const Decomposition& parts, int i);

/// Exact value at a rational point. Throws std::out_of_range for an unassigned variable.
Rational evaluate(const MultilinearPolynomial& p, const std::map<int, Rational>& point);

BigInt abs_coeff_sum(const MultilinearPolynomial& p);

enum class Format { text, latex, json };

/// Throws std::invalid_argument on an unknown name.
Format parse_format(const std::string& name);

/// text:  "x_1 - x_1 x_2";  latex: "x_{1}-x_{1}x_{2}";  json: {"terms":[{"vars":[1],"coeff":1},...]}.
/// Text and LaTeX list terms by degree, then lexicographically; JSON lists them lexicographically.
std::string serialize(const MultilinearPolynomial& p, Format format);

}  // namespace qssep
