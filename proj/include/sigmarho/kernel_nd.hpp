#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sigmarho/graph.hpp"
#include "sigmarho/sigma_rho.hpp"

namespace sigmarho {

struct TypeBlock {
    std::vector<int> vertices;  // ascending
    bool is_clique = false;     // singletons count as independent
};

// Partition of V into same-type classes: u ~ v iff N(u)\{v} == N(v)\{u}.
// Blocks ordered by their smallest vertex.
struct TypePartition {
    std::vector<TypeBlock> blocks;
    std::vector<int> block_of;  // vertex -> block index
};

TypePartition compute_type_partition(const Graph& g);

// Whether u ~ v in g (exposed for the coarseness checks).
bool same_type(const Graph& g, int u, int v);

struct NdKernel {
    WeightedGraph reduced;
    std::int64_t budget_out = 0;     // unchanged budget k
    std::vector<int> kept_vertices;  // new index -> original vertex
    std::vector<int> kept_block;     // new index -> original block index
};

// All three kernels require a connected input graph and keep, per block, the
// lowest-index vertices. budget k passes through unchanged.

// sigma, rho finite: keep min(t_i, max(s,r)+1) per block, all weights 1,
// where s = max sigma, r = max rho. |V'| <= (max(s,r)+1) * #blocks.
NdKernel kernel_bounded(const Graph& g, const SigmaRhoSpec& spec, std::int64_t k);

// sigma = naturals, rho finite with max r: keep min(t_i, r+1); blocks that
// shrank get r weight-1 vertices plus one heavy vertex of weight t_i - r
// (the lowest-index kept one); block weights always sum to t_i.
NdKernel kernel_rho_finite(const Graph& g, const SigmaRhoSpec& spec, std::int64_t k);

// sigma finite with max s, rho = positive naturals: keep min(t_i, s+2);
// blocks that shrank get s+1 weight-1 vertices plus one heavy vertex of
// weight t_i - (s+1).
NdKernel kernel_sigma_finite(const Graph& g, const SigmaRhoSpec& spec, std::int64_t k);

// Enumeration solver over block profiles k_i in {0,...,r,t_i} (rho finite,
// max r): members of a block are interchangeable, so each profile is realized
// by the lowest-index vertices and validated explicitly. Throws
// CapExceededError when the profile space exceeds profile_cap.
DominationAnswer nd_enumerate_solve(const Graph& g, const SigmaRhoSpec& spec,
                                    std::optional<std::int64_t> budget = std::nullopt,
                                    std::int64_t profile_cap = 20'000'000);

// Same idea for sigma finite (max s), rho = positive naturals: profiles
// k_i in {0,...,s+1,t_i}. Backs the weighted-kernel fallback.
DominationAnswer nd_enumerate_solve_sigma(const Graph& g, const SigmaRhoSpec& spec,
                                          std::optional<std::int64_t> budget = std::nullopt,
                                          std::int64_t profile_cap = 20'000'000);

enum class NdVariant { Bounded, RhoFinite, SigmaFinite };

// Routing wrapper used by the CLI: weighted variants fall back to the
// enumeration solver when n > 2^b (kernel weights might not fit in b bits,
// with b the number of blocks); otherwise produces the kernel.
std::variant<NdKernel, DominationAnswer> kernelize_nd(const Graph& g, const SigmaRhoSpec& spec,
                                                      std::int64_t k, NdVariant variant);

}  // namespace sigmarho
