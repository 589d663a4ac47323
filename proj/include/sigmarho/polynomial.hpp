#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigmarho/rational.hpp"

namespace sigmarho {

// Multilinear monomial: sorted list of distinct variable indices; {} is the
// constant term.
using Monomial = std::vector<int>;

// One term of a not-yet-canonical polynomial; repeated indices mean powers.
using RawTerm = std::pair<std::vector<int>, Rational>;

// Multivariate polynomial in canonical multilinear form. Over 0/1 assignments
// x^k = x, so products stay multilinear by taking unions of index sets.
class Polynomial {
public:
    Polynomial() = default;  // zero
    static Polynomial constant(const Rational& c);
    static Polynomial variable(int index);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // 0 for constants and zero
    std::vector<int> variables() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    // Value under a 0/1 assignment; assignment[i] is the value of x_i.
    Rational evaluate(const std::vector<int>& assignment) const;

    // Replace every occurrence of x_index by `replacement`.
    Polynomial substitute(int index, const Polynomial& replacement) const;

    // Terms joined by " + ", each "<coeff> * x<i> x<j>" or a bare constant,
    // in canonical monomial order.
    std::string to_string() const;

    // m must be sorted and duplicate-free.
    void add_term(const Monomial& m, const Rational& c);

    bool operator==(const Polynomial&) const = default;

private:
    std::map<Monomial, Rational> terms_;  // no zero coefficients
};

// Collapse exponents (x^k -> x), merge equal monomials, drop zeros. This is
// the canonicalisation entry point; on an already-canonical polynomial it is
// the identity.
Polynomial multilinearize(const std::vector<RawTerm>& raw_terms);
inline const Polynomial& multilinearize(const Polynomial& p) { return p; }

// Dense univariate polynomial, coeffs[i] * x^i.
struct UnivariatePoly {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 when zero
    Rational evaluate(const Rational& x) const;
    std::string to_string() const;
    bool operator==(const UnivariatePoly&) const = default;
};

}  // namespace sigmarho
