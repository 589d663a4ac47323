#include "sigmarho/csp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sigmarho/errors.hpp"

namespace sigmarho {

void validate_csp(const RootCspInstance& csp) {
    if (csp.variable_count < 0) throw std::invalid_argument("negative variable count");
    if (csp.degree_bound < 0) throw std::invalid_argument("negative degree bound");
    for (const auto& c : csp.constraints) {
        if (c.degree() > csp.degree_bound) {
            throw std::invalid_argument("constraint degree " + std::to_string(c.degree()) +
                                        " exceeds bound " + std::to_string(csp.degree_bound));
        }
        for (const auto& [m, coeff] : c.terms()) {
            for (int v : m) {
                if (v < 0 || v >= csp.variable_count) {
                    throw std::invalid_argument("variable x" + std::to_string(v) +
                                                " out of range");
                }
            }
        }
    }
}

bool satisfies(const RootCspInstance& csp, const std::vector<int>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(csp.variable_count)) {
        throw std::invalid_argument("assignment length mismatch");
    }
    for (const auto& c : csp.constraints) {
        if (c.evaluate(assignment) != 0) return false;
    }
    return true;
}

std::optional<std::vector<int>> satisfiable_brute(const RootCspInstance& csp, int cap) {
    int n = csp.variable_count;
    if (n > cap) {
        throw CapExceededError("instance has " + std::to_string(n) + " variables, oracle cap is " +
                               std::to_string(cap));
    }
    if (n > 62) throw CapExceededError("assignment oracle limited to 62 variables");
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    // Counting with x_{n-1} as the least significant bit enumerates
    // assignments in lexicographic order over (x_0, ..., x_{n-1}).
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        for (int i = 0; i < n; ++i) assignment[i] = (mask >> (n - 1 - i)) & 1;
        if (satisfies(csp, assignment)) return assignment;
    }
    return std::nullopt;
}

namespace {

// Echelon basis over sparse coefficient vectors keyed by monomial. Rows are
// normalized so the pivot coefficient is 1.
struct EchelonBasis {
    std::map<Monomial, std::map<Monomial, Rational>> rows;  // pivot -> row

    // Reduces `vec` in place; returns true if a nonzero remainder is left
    // (and then installs it as a new pivot row).
    bool insert(std::map<Monomial, Rational> vec) {
        while (!vec.empty()) {
            auto lead = vec.begin();  // smallest monomial in map order
            auto row = rows.find(lead->first);
            if (row == rows.end()) {
                Rational inv = lead->second;
                for (auto& [m, c] : vec) c /= inv;
                rows.emplace(vec.begin()->first, std::move(vec));
                return true;
            }
            Rational factor = lead->second;
            for (const auto& [m, c] : row->second) {
                auto [it, inserted] = vec.try_emplace(m, 0);
                it->second -= factor * c;
                if (it->second == 0) vec.erase(it);
            }
        }
        return false;
    }
};

}  // namespace

RootCspInstance reduce_constraints(const RootCspInstance& csp) {
    validate_csp(csp);
    RootCspInstance out;
    out.variable_count = csp.variable_count;
    out.degree_bound = csp.degree_bound;
    EchelonBasis basis;
    for (const auto& c : csp.constraints) {
        if (basis.insert(c.terms())) out.constraints.push_back(c);
    }
    return out;
}

std::int64_t monomial_count_bound(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("negative argument");
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    std::int64_t total = 0;
    std::int64_t binom = 1;  // C(n, 0)
    for (int i = 0; i <= std::min(n, d); ++i) {
        if (i > 0) {
            if (binom > cap / (n - i + 1)) return cap;
            binom = binom * (n - i + 1) / i;
        }
        if (total > cap - binom) return cap;
        total += binom;
    }
    return total;
}

std::string serialize_csp(const RootCspInstance& csp) {
    std::ostringstream out;
    out << "csp " << csp.variable_count << " " << csp.degree_bound << " " << csp.constraints.size()
        << "\n";
    for (const auto& c : csp.constraints) out << c.to_string() << "\n";
    return out.str();
}

namespace {

// One term: "<coeff>" or "<coeff> * x<i> x<j> ...".
void parse_term(const std::string& text, int lineno, Polynomial& into) {
    std::istringstream ts(text);
    std::string coeff_text;
    if (!(ts >> coeff_text)) throw ParseError("empty term", lineno);
    Rational coeff;
    try {
        coeff = parse_rational(coeff_text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
    }
    std::string tok;
    Monomial m;
    bool saw_star = false;
    while (ts >> tok) {
        if (tok == "*") {
            if (saw_star) throw ParseError("unexpected '*'", lineno);
            saw_star = true;
            continue;
        }
        if (!saw_star || tok.size() < 2 || tok[0] != 'x') {
            throw ParseError("bad term token '" + tok + "'", lineno);
        }
        try {
            m.push_back(std::stoi(tok.substr(1)));
        } catch (const std::exception&) {
            throw ParseError("bad variable token '" + tok + "'", lineno);
        }
    }
    if (saw_star && m.empty()) throw ParseError("'*' without variables", lineno);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    into.add_term(m, coeff);
}

}  // namespace

RootCspInstance parse_csp(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    RootCspInstance out;
    bool have_header = false;
    long long expected = 0;

    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (!have_header) {
            std::istringstream hs(line);
            std::string tag;
            long long vars = -1, degree = -1;
            if (!(hs >> tag >> vars >> degree >> expected) || tag != "csp" || vars < 0 ||
                degree < 0 || expected < 0) {
                throw ParseError("malformed header, expected 'csp <vars> <degree> <count>'",
                                 lineno);
            }
            out.variable_count = static_cast<int>(vars);
            out.degree_bound = static_cast<int>(degree);
            have_header = true;
            continue;
        }
        Polynomial c;
        std::string term;
        std::string rest = line;
        std::size_t pos = 0;
        while ((pos = rest.find(" + ")) != std::string::npos) {
            parse_term(rest.substr(0, pos), lineno, c);
            rest = rest.substr(pos + 3);
        }
        parse_term(rest, lineno, c);
        if (c.to_string() != line) {
            // The format is canonical; anything that round-trips differently
            // (unsorted variables, unreduced rationals) is rejected.
            throw ParseError("non-canonical constraint line", lineno);
        }
        out.constraints.push_back(std::move(c));
    }
    if (!have_header) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
    if (static_cast<long long>(out.constraints.size()) != expected) {
        throw ParseError("constraint count mismatch with header", lineno);
    }
    try {
        validate_csp(out);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
    }
    return out;
}

}  // namespace sigmarho
