#include "qssep/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qssep {

namespace {

void accumulate(MultilinearPolynomial::TermMap& terms, const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Monomial without(const Monomial& m, int i) {
    Monomial out;
    out.reserve(m.size());
    for (int v : m) {
        if (v != i) out.push_back(v);
    }
    return out;
}

bool has(const Monomial& m, int i) { return std::binary_search(m.begin(), m.end(), i); }

}  // namespace

MultilinearPolynomial MultilinearPolynomial::constant(const BigInt& c) {
    MultilinearPolynomial p;
    p.add_term({}, c);
    return p;
}

MultilinearPolynomial MultilinearPolynomial::variable(int index) {
    MultilinearPolynomial p;
    p.add_term({index}, 1);
    return p;
}

MultilinearPolynomial MultilinearPolynomial::from_terms(
    const std::vector<std::pair<Monomial, BigInt>>& terms) {
    MultilinearPolynomial p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

void MultilinearPolynomial::add_term(Monomial m, const BigInt& c) {
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) {
        throw std::invalid_argument("monomial is not squarefree");
    }
    if (!m.empty() && m.front() < 1) {
        throw std::invalid_argument("variable indices must be positive");
    }
    accumulate(terms_, m, c);
}

BigInt MultilinearPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<int> MultilinearPolynomial::variables() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
    return {vars.begin(), vars.end()};
}

bool MultilinearPolynomial::depends_on(int index) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [index](const auto& term) { return has(term.first, index); });
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& other) {
    for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& other) {
    for (const auto& [m, c] : other.terms_) accumulate(terms_, m, -c);
    return *this;
}

MultilinearPolynomial operator-(const MultilinearPolynomial& a) {
    MultilinearPolynomial out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultilinearPolynomial add(const MultilinearPolynomial& p, const MultilinearPolynomial& q) { return p + q; }
MultilinearPolynomial subtract(const MultilinearPolynomial& p, const MultilinearPolynomial& q) { return p - q; }
MultilinearPolynomial negate(const MultilinearPolynomial& p) { return -p; }

MultilinearPolynomial scale(const MultilinearPolynomial& p, const BigInt& c) {
    MultilinearPolynomial out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : p.terms()) out.add_term(m, coeff * c);
    return out;
}

MultilinearPolynomial multiply_disjoint(const MultilinearPolynomial& p, const MultilinearPolynomial& q) {
    const auto pv = p.variables();
    const auto qv = q.variables();
    std::vector<int> shared;
    std::set_intersection(pv.begin(), pv.end(), qv.begin(), qv.end(), std::back_inserter(shared));
    if (!shared.empty()) {
        throw std::domain_error("multiply_disjoint: both factors depend on x_" + std::to_string(shared.front()));
    }
    MultilinearPolynomial out;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            Monomial m;
            m.reserve(m1.size() + m2.size());
            std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
            out.add_term(std::move(m), c1 * c2);
        }
    }
    return out;
}

MultilinearPolynomial coefficient_of(const MultilinearPolynomial& p, int i) {
    MultilinearPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (has(m, i)) out.add_term(without(m, i), c);
    }
    return out;
}

MultilinearPolynomial substitute_unit(const MultilinearPolynomial& p, int i) {
    MultilinearPolynomial out;
    for (const auto& [m, c] : p.terms()) out.add_term(without(m, i), c);
    return out;
}

MultilinearPolynomial rename_variables(const MultilinearPolynomial& p, const std::map<int, int>& rename) {
    MultilinearPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        Monomial renamed = m;
        for (int& v : renamed) {
            if (auto it = rename.find(v); it != rename.end()) v = it->second;
        }
        out.add_term(std::move(renamed), c);
    }
    return out;
}

Decomposition decompose(const MultilinearPolynomial& p, int i) {
    Decomposition parts;
    for (const auto& [m, c] : p.terms()) {
        const bool hi = has(m, i);
        const bool hj = has(m, i + 1);
        const Monomial rest = without(without(m, i), i + 1);
        auto& target = hi ? (hj ? parts.d : parts.b) : (hj ? parts.c : parts.a);
        target.add_term(rest, c);
    }
    return parts;
}

MultilinearPolynomial recompose(const Decomposition& parts, int i) {
    const auto xi = MultilinearPolynomial::variable(i);
    const auto xj = MultilinearPolynomial::variable(i + 1);
    return parts.a + multiply_disjoint(xi, parts.b) + multiply_disjoint(xj, parts.c) +
           multiply_disjoint(multiply_disjoint(xi, xj), parts.d);
}

Rational evaluate(const MultilinearPolynomial& p, const std::map<int, Rational>& point) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term(c);
        for (int v : m) {
            auto it = point.find(v);
            if (it == point.end()) {
                throw std::out_of_range("no value assigned to x_" + std::to_string(v));
            }
            term *= it->second;
        }
        total += term;
    }
    return total;
}

BigInt abs_coeff_sum(const MultilinearPolynomial& p) {
    BigInt total = 0;
    for (const auto& [m, c] : p.terms()) total += abs(c);
    return total;
}

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "latex") return Format::latex;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::vector<std::pair<Monomial, BigInt>> graded_terms(const MultilinearPolynomial& p) {
    std::vector<std::pair<Monomial, BigInt>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    return terms;
}

std::string serialize_text(const MultilinearPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : graded_terms(p)) {
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (mag != 1 || m.empty()) body = mag.str();
        for (int v : m) {
            if (!body.empty()) body += ' ';
            body += "x_" + std::to_string(v);
        }
        out += body;
    }
    return out;
}

std::string serialize_latex(const MultilinearPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : graded_terms(p)) {
        const BigInt mag = abs(c);
        if (c < 0) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        first = false;
        if (mag != 1 || m.empty()) out += mag.str();
        for (int v : m) out += "x_{" + std::to_string(v) + "}";
    }
    return out;
}

}  // namespace

std::string serialize(const MultilinearPolynomial& p, Format format) {
    switch (format) {
        case Format::text:
            return serialize_text(p);
        case Format::latex:
            return serialize_latex(p);
        case Format::json: {
            std::string out = "{\"terms\":[";
            bool first = true;
            for (const auto& [m, c] : p.terms()) {
                if (!first) out += ',';
                first = false;
                out += "{\"vars\":[";
                for (std::size_t j = 0; j < m.size(); ++j) {
                    if (j) out += ',';
                    out += std::to_string(m[j]);
                }
                out += "],\"coeff\":" + c.str() + "}";
            }
            return out + "]}";
        }
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace qssep
