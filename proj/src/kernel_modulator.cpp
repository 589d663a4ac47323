#include "sigmarho/kernel_modulator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sigmarho/errors.hpp"

namespace sigmarho {

namespace {

void require_finite_nonempty(const SigmaRhoSpec& spec) {
    if (!spec.sigma.is_finite() || !spec.rho.is_finite()) {
        throw UnsupportedSpecError("sigma and rho must be finite here: " + spec.to_string());
    }
    if (spec.sigma.values().empty() || spec.rho.values().empty()) {
        throw UnsupportedSpecError("sigma and rho must be non-empty");
    }
}

}  // namespace

OffsetSets build_offset_sets(const SigmaRhoSpec& spec, int d) {
    require_finite_nonempty(spec);
    if (d < 0) throw std::invalid_argument("negative degree bound");
    std::set<int> p, q;
    for (int i : spec.rho.values()) {
        for (int j = 0; j <= d; ++j) p.insert(i - j);
    }
    for (int i : spec.sigma.values()) {
        for (int j = 0; j <= d; ++j) q.insert(i - j);
    }
    return {{p.begin(), p.end()}, {q.begin(), q.end()}};
}

bool check_guard(const SigmaRhoSpec& spec, int d) {
    require_finite_nonempty(spec);
    if (d < 0) throw std::invalid_argument("negative degree bound");
    for (int j = 0; j <= d; ++j) {
        for (int i : spec.sigma.values()) {
            if (spec.rho.contains(i - j)) return false;
        }
        for (int i : spec.rho.values()) {
            if (spec.sigma.contains(i - j)) return false;
        }
    }
    return true;
}

RootCspInstance build_csp(const Graph& g, const SigmaRhoSpec& spec) {
    require_finite_nonempty(spec);
    int n = g.vertex_count();
    RootCspInstance out;
    out.variable_count = n;
    int larger = std::max(static_cast<int>(spec.sigma.values().size()),
                          static_cast<int>(spec.rho.values().size()));
    out.degree_bound = 2 * larger + 1;
    out.constraints.reserve(static_cast<std::size_t>(n));

    for (int v = 0; v < n; ++v) {
        Polynomial count;
        for (int u : g.neighbors(v)) count += Polynomial::variable(u);
        Polynomial sv = Polynomial::variable(v);

        Polynomial y = Polynomial::constant(1);
        for (int i : spec.rho.values()) {
            Polynomial diff = Polynomial::constant(i) - count;
            y = y * (diff * diff + sv);
        }
        Polynomial z = Polynomial::constant(1);
        for (int j : spec.sigma.values()) {
            Polynomial diff = Polynomial::constant(j) - count;
            z = z * (diff * diff + (sv - Polynomial::constant(1)));
        }
        out.constraints.push_back(y * (Polynomial::constant(1) - sv) + z * sv);
    }
    validate_csp(out);
    return out;
}

namespace {

using DensePoly = std::vector<Rational>;  // coeffs[i] * x^i

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

UnivariatePoly lagrange_g(const OffsetSets& sets) {
    std::vector<std::pair<int, Rational>> nodes;  // (node, target value)
    for (int a : sets.p) nodes.emplace_back(a, Rational(0));
    for (int b : sets.q) nodes.emplace_back(b, Rational(1));
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i].first == nodes[i - 1].first) {
            throw InterpolationError("offset sets overlap at " + std::to_string(nodes[i].first));
        }
    }
    if (nodes.empty()) throw InterpolationError("no interpolation nodes");

    // g = sum over P-nodes of L_a + 2 * sum over Q-nodes of L_b, minus 1;
    // equivalently interpolate value 1 on P and 2 on Q, then subtract 1.
    DensePoly acc{Rational(0)};
    acc.resize(nodes.size(), Rational(0));
    for (const auto& [node, target] : nodes) {
        DensePoly basis{Rational(1)};
        Rational denom = 1;
        for (const auto& [other, t2] : nodes) {
            if (other == node) continue;
            basis = dense_mul(basis, DensePoly{Rational(-other), Rational(1)});
            denom *= Rational(node - other);
        }
        Rational scale = (target + 1) / denom;
        for (std::size_t i = 0; i < basis.size(); ++i) acc[i] += scale * basis[i];
    }
    acc[0] -= 1;
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return UnivariatePoly{acc};
}

namespace {

// g evaluated at a sum of variables, via Horner over polynomials.
Polynomial compose_with_sum(const UnivariatePoly& g, const std::vector<int>& vars) {
    Polynomial linear;
    for (int v : vars) linear += Polynomial::variable(v);
    Polynomial acc;
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) {
        acc = acc * linear + Polynomial::constant(*it);
    }
    return acc;
}

}  // namespace

SubstitutionResult substitute_non_modulator(const RootCspInstance& csp, const Graph& g,
                                            const VertexSet& s, const SigmaRhoSpec& spec, int d) {
    if (csp.variable_count != g.vertex_count()) {
        throw std::invalid_argument("csp/graph variable count mismatch");
    }
    if (!verify_modulator(g, s, d)) {
        throw std::invalid_argument("not a degree-" + std::to_string(d) + " modulator");
    }
    if (!check_guard(spec, d)) {
        throw UnsupportedSpecError("guard fails for " + spec.to_string() + " at d=" +
                                   std::to_string(d));
    }

    SubstitutionResult out;
    out.g = lagrange_g(build_offset_sets(spec, d));
    out.modulator_order.assign(s.begin(), s.end());

    int n = g.vertex_count();
    std::vector<int> var_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < out.modulator_order.size(); ++i) {
        var_of[out.modulator_order[i]] = static_cast<int>(i);
    }

    std::vector<Polynomial> replacement(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        EliminationEntry entry;
        entry.vertex = v;
        for (int u : g.neighbors(v)) {
            if (s.contains(u)) entry.modulator_neighbors.push_back(u);
        }
        replacement[v] = compose_with_sum(out.g, entry.modulator_neighbors);
        out.elimination_table.push_back(std::move(entry));
    }

    out.csp.variable_count = static_cast<int>(out.modulator_order.size());
    for (const auto& c : csp.constraints) {
        Polynomial p = c;
        for (int v : c.variables()) {
            if (var_of[v] == -1) p = p.substitute(v, replacement[v]);
        }
        // Re-index vertices to modulator variable slots.
        Polynomial relabeled;
        for (const auto& [m, coeff] : p.terms()) {
            Monomial mapped;
            mapped.reserve(m.size());
            for (int v : m) {
                if (var_of[v] == -1) throw std::logic_error("substitution left a non-modulator variable");
                mapped.push_back(var_of[v]);
            }
            std::sort(mapped.begin(), mapped.end());
            relabeled.add_term(mapped, coeff);
        }
        out.csp.constraints.push_back(std::move(relabeled));
    }

    int actual = 0;
    for (const auto& c : out.csp.constraints) actual = std::max(actual, c.degree());
    out.csp.degree_bound = actual;
    validate_csp(out.csp);
    return out;
}

namespace {

std::int64_t estimate_bits(const RootCspInstance& csp) {
    // Storage model: every term costs its coefficient (numerator and
    // denominator bit lengths) plus one variable-index field per monomial
    // entry.
    int idx_bits = bit_length(BigInt(std::max(1, csp.variable_count - 1)));
    std::int64_t total = 0;
    for (const auto& c : csp.constraints) {
        for (const auto& [m, coeff] : c.terms()) {
            total += bit_length(numerator(coeff));
            total += bit_length(denominator(coeff));
            total += static_cast<std::int64_t>(m.size()) * idx_bits;
        }
    }
    return total;
}

}  // namespace

KernelResult kernelize(const Graph& g, const VertexSet& s, int d, const SigmaRhoSpec& spec) {
    RootCspInstance full = build_csp(g, spec);
    int pre_degree = 0;
    for (const auto& c : full.constraints) pre_degree = std::max(pre_degree, c.degree());

    SubstitutionResult sub = substitute_non_modulator(full, g, s, spec, d);

    KernelResult out;
    out.metadata.gamma = (d + 1) * (static_cast<int>(spec.sigma.values().size()) +
                                    static_cast<int>(spec.rho.values().size())) -
                         1;
    out.metadata.alpha = std::max(static_cast<int>(spec.sigma.values().size()),
                                  static_cast<int>(spec.rho.values().size())) +
                         1;
    out.metadata.pre_substitution_degree = pre_degree;
    if (sub.csp.degree_bound > out.metadata.gamma * out.metadata.alpha) {
        throw std::logic_error("substituted degree exceeds gamma*alpha");
    }
    // Advertise the analytic bound, capped by the trivial multilinear one.
    sub.csp.degree_bound =
        std::min(out.metadata.gamma * out.metadata.alpha, sub.csp.variable_count);

    out.csp = reduce_constraints(sub.csp);
    out.modulator_order = std::move(sub.modulator_order);
    out.g = std::move(sub.g);
    out.elimination_table = std::move(sub.elimination_table);
    out.metadata.bit_size_estimate = estimate_bits(out.csp);
    out.graph = g;
    out.spec = spec;
    out.modulator = s;
    out.degree_bound_d = d;
    return out;
}

VertexSet lift_assignment(const KernelResult& kr, const std::vector<int>& tau_prime) {
    if (tau_prime.size() != kr.modulator_order.size()) {
        throw std::invalid_argument("assignment length mismatch");
    }
    for (int b : tau_prime) {
        if (b != 0 && b != 1) throw std::invalid_argument("assignment values must be 0/1");
    }
    if (!satisfies(kr.csp, tau_prime)) {
        throw std::invalid_argument("assignment does not satisfy the reduced instance");
    }

    std::vector<int> var_of_vertex(static_cast<std::size_t>(kr.graph.vertex_count()), -1);
    for (std::size_t i = 0; i < kr.modulator_order.size(); ++i) {
        var_of_vertex[kr.modulator_order[i]] = static_cast<int>(i);
    }

    VertexSet lifted;
    for (std::size_t i = 0; i < kr.modulator_order.size(); ++i) {
        if (tau_prime[i] == 1) lifted.insert(kr.modulator_order[i]);
    }
    for (const auto& entry : kr.elimination_table) {
        int sum = 0;
        for (int u : entry.modulator_neighbors) sum += tau_prime[var_of_vertex[u]];
        Rational value = kr.g.evaluate(Rational(sum));
        if (value == 1) {
            lifted.insert(entry.vertex);
        } else if (value != 0) {
            throw LiftError("vertex " + std::to_string(entry.vertex) + " lifts to g(" +
                            std::to_string(sum) + ") = " + rational_to_string(value) +
                            ", not 0/1");
        }
    }
    if (!is_sigma_rho_dominating(kr.graph, lifted, kr.spec)) {
        throw LiftError("lifted assignment is not a valid dominating set");
    }
    return lifted;
}

DominationAnswer solve_by_guessing(const Graph& g, const VertexSet& s, int d,
                                   const SigmaRhoSpec& spec) {
    if (!verify_modulator(g, s, d)) {
        throw std::invalid_argument("not a degree-" + std::to_string(d) + " modulator");
    }
    if (!check_guard(spec, d)) {
        throw UnsupportedSpecError("guard fails for " + spec.to_string() + " at d=" +
                                   std::to_string(d));
    }
    OffsetSets sets = build_offset_sets(spec, d);
    auto in_p = [&](int x) { return std::binary_search(sets.p.begin(), sets.p.end(), x); };
    auto in_q = [&](int x) { return std::binary_search(sets.q.begin(), sets.q.end(), x); };

    int k = s.size();
    if (k > 62) throw CapExceededError("modulator too large to enumerate");
    const std::vector<int>& order = s.values();

    DominationAnswer best;
    std::vector<int> in_set;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        in_set.clear();
        for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1) in_set.push_back(order[i]);
        }
        VertexSet candidate(in_set);
        bool feasible = true;
        // Non-modulator values are forced: a modulator-neighborhood sum in P
        // means "out", in Q means "in", anything else has no valid extension.
        for (int v = 0; v < g.vertex_count() && feasible; ++v) {
            if (s.contains(v)) continue;
            int sum = 0;
            for (int u : g.neighbors(v)) {
                if (candidate.contains(u) && s.contains(u)) ++sum;
            }
            if (in_q(sum)) {
                candidate.insert(v);
            } else if (!in_p(sum)) {
                feasible = false;
            }
        }
        if (!feasible) continue;
        if (!is_sigma_rho_dominating(g, candidate, spec)) continue;
        auto size = static_cast<std::int64_t>(candidate.size());
        if (!best.exists || size < *best.cost ||
            (size == *best.cost && candidate.values() < best.witness->values())) {
            best = {true, candidate, size};
        }
    }
    return best;
}

}  // namespace sigmarho
