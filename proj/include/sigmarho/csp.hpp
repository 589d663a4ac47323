#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmarho/config.hpp"
#include "sigmarho/polynomial.hpp"

namespace sigmarho {

// Polynomial root CSP: is there a 0/1 assignment of the variables at which
// every constraint evaluates to 0?
struct RootCspInstance {
    int variable_count = 0;
    int degree_bound = 0;  // every constraint has degree <= degree_bound
    std::vector<Polynomial> constraints;

    bool operator==(const RootCspInstance&) const = default;
};

// Checks the structural invariants (variable indices in range, degrees within
// the bound); throws std::invalid_argument on violation.
void validate_csp(const RootCspInstance& csp);

bool satisfies(const RootCspInstance& csp, const std::vector<int>& assignment);

// First satisfying 0/1 assignment in lexicographic order over
// (x_0, ..., x_{n-1}), or nullopt. Throws CapExceededError above the cap.
std::optional<std::vector<int>> satisfiable_brute(const RootCspInstance& csp,
                                                  int cap = oracle_csp_var_cap());

// Keeps a maximal linearly independent subsequence of the constraints, chosen
// greedily in list order over their multilinear coefficient vectors (exact
// rational Gaussian elimination). The kept set has the same satisfying
// assignments and at most sum_{i<=degree_bound} C(n, i) members.
RootCspInstance reduce_constraints(const RootCspInstance& csp);

// Number of multilinear monomials over n variables with degree <= d.
// Saturates at int64 max.
std::int64_t monomial_count_bound(int n, int d);

std::string serialize_csp(const RootCspInstance& csp);
RootCspInstance parse_csp(const std::string& text);

}  // namespace sigmarho
