#include "sigmarho/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sigmarho {

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Polynomial Polynomial::variable(int index) {
    if (index < 0) throw std::invalid_argument("negative variable index");
    Polynomial p;
    p.terms_[Monomial{index}] = 1;
    return p;
}

int Polynomial::degree() const {
    std::size_t best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.size());
    return static_cast<int>(best);
}

std::vector<int> Polynomial::variables() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
    return {vars.begin(), vars.end()};
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    Monomial merged;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // Union of index sets: x * x = x over 0/1 assignments.
            merged.clear();
            std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
            out.add_term(merged, ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : p.terms_) out.terms_[m] = c * coeff;
    return out;
}

Rational Polynomial::evaluate(const std::vector<int>& assignment) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        bool live = true;
        for (int v : m) {
            if (v >= static_cast<int>(assignment.size())) {
                throw std::invalid_argument("assignment too short for variable x" +
                                            std::to_string(v));
            }
            if (assignment[v] == 0) {
                live = false;
                break;
            }
            if (assignment[v] != 1) throw std::invalid_argument("assignment values must be 0/1");
        }
        if (live) total += c;
    }
    return total;
}

Polynomial Polynomial::substitute(int index, const Polynomial& replacement) const {
    Polynomial out;
    Monomial rest;
    for (const auto& [m, c] : terms_) {
        auto it = std::lower_bound(m.begin(), m.end(), index);
        if (it == m.end() || *it != index) {
            out.add_term(m, c);
            continue;
        }
        rest.assign(m.begin(), it);
        rest.insert(rest.end(), std::next(it), m.end());
        Polynomial partial;
        partial.terms_[rest] = c;
        out += partial * replacement;
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << rational_to_string(c);
        if (!m.empty()) {
            out << " *";
            for (int v : m) out << " x" << v;
        }
    }
    return out.str();
}

Polynomial multilinearize(const std::vector<RawTerm>& raw_terms) {
    Polynomial out;
    for (const auto& [indices, coeff] : raw_terms) {
        Monomial m = indices;
        for (int v : m) {
            if (v < 0) throw std::invalid_argument("negative variable index");
        }
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());  // x^k -> x
        out.add_term(m, coeff);
    }
    return out;
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UnivariatePoly::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) out << " ";
        out << rational_to_string(coeffs[i]);
    }
    return out.str();
}

}  // namespace sigmarho
