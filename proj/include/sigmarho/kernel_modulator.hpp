#pragma once

#include <cstdint>
#include <vector>

#include "sigmarho/csp.hpp"
#include "sigmarho/graph.hpp"
#include "sigmarho/polynomial.hpp"
#include "sigmarho/sigma_rho.hpp"

namespace sigmarho {

// P collects i - j for i in rho, Q the same for sigma, over offsets 0 <= j <= d.
// Entries may be negative; each list sorted, deduplicated.
struct OffsetSets {
    std::vector<int> p;
    std::vector<int> q;
};

OffsetSets build_offset_sets(const SigmaRhoSpec& spec, int d);

// True iff no i in sigma has i - j in rho and no i in rho has i - j in sigma
// for any 0 <= j <= d; equivalently, P and Q are disjoint. Requires both sets
// finite and non-empty (throws UnsupportedSpecError otherwise).
bool check_guard(const SigmaRhoSpec& spec, int d);

// One constraint per vertex v over variables s_0..s_{n-1} (variable i is
// vertex i):
//   Y * (1 - s_v) + Z * s_v   with count = sum of s_u over u in N(v),
//   Y = prod_{i in rho}   ((i - count)^2 + s_v),
//   Z = prod_{j in sigma} ((j - count)^2 + (s_v - 1)),
// multilinearized. A 0/1 assignment is a common root iff its support is a
// dominating set for the spec. Requires finite non-empty sigma and rho.
RootCspInstance build_csp(const Graph& g, const SigmaRhoSpec& spec);

// Interpolation through the offset sets: g(x) = 0 on P, 1 on Q, degree
// |P u Q| - 1. Throws InterpolationError if P and Q intersect.
UnivariatePoly lagrange_g(const OffsetSets& sets);

struct EliminationEntry {
    int vertex = 0;                       // non-modulator vertex it eliminates
    std::vector<int> modulator_neighbors; // N(vertex) ^ S, ascending
};

struct KernelMetadata {
    int gamma = 0;                  // (d+1)(|sigma|+|rho|) - 1, degree cap for g
    int alpha = 0;                  // max(|sigma|,|rho|) + 1
    int pre_substitution_degree = 0;
    std::int64_t bit_size_estimate = 0;
};

struct SubstitutionResult {
    RootCspInstance csp;              // over modulator variables 0..k-1
    UnivariatePoly g;
    std::vector<int> modulator_order; // variable index -> original vertex
    std::vector<EliminationEntry> elimination_table;  // ascending by vertex
};

// Replaces s_v for every v outside the modulator by g(sum of its modulator
// neighbors' variables) and re-indexes to modulator variables. Requires the
// guard for (spec, d) and that s is a degree-d modulator.
SubstitutionResult substitute_non_modulator(const RootCspInstance& csp, const Graph& g,
                                            const VertexSet& s, const SigmaRhoSpec& spec, int d);

struct KernelResult {
    RootCspInstance csp;              // reduced, over modulator variables
    std::vector<int> modulator_order;
    UnivariatePoly g;
    std::vector<EliminationEntry> elimination_table;
    KernelMetadata metadata;

    // Inputs carried for lifting and auditing.
    Graph graph;
    SigmaRhoSpec spec;
    VertexSet modulator;
    int degree_bound_d = 0;
};

// build_csp -> substitute_non_modulator -> reduce_constraints, with metadata.
KernelResult kernelize(const Graph& g, const VertexSet& s, int d, const SigmaRhoSpec& spec);

// Extends a satisfying assignment of kr.csp to a vertex set of kr.graph: the
// modulator part is read off tau_prime, every other vertex takes
// g(sum over modulator neighbors). Throws LiftError if some g value is not
// 0/1 or the lifted set fails validation.
VertexSet lift_assignment(const KernelResult& kr, const std::vector<int>& tau_prime);

// Direct solver for small modulators: try all 2^|S| selections of S, extend
// each non-modulator vertex by its forced value (vertices whose modulator
// neighborhood sums to i - j with i in rho get 0, with i in sigma get 1;
// other sums admit no valid extension), validate, keep the minimum size.
// Requires the guard. Intended for 2^|S| <= n, correct regardless.
DominationAnswer solve_by_guessing(const Graph& g, const VertexSet& s, int d,
                                   const SigmaRhoSpec& spec);

}  // namespace sigmarho
