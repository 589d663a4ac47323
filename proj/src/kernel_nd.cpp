#include "sigmarho/kernel_nd.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigmarho/errors.hpp"

namespace sigmarho {

bool same_type(const Graph& g, int u, int v) {
    if (u == v) return true;
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    // Compare N(u)\{v} with N(v)\{u}.
    auto iu = nu.begin();
    auto iv = nv.begin();
    for (;;) {
        while (iu != nu.end() && *iu == v) ++iu;
        while (iv != nv.end() && *iv == u) ++iv;
        if (iu == nu.end() || iv == nv.end()) break;
        if (*iu != *iv) return false;
        ++iu;
        ++iv;
    }
    while (iu != nu.end() && *iu == v) ++iu;
    while (iv != nv.end() && *iv == u) ++iv;
    return iu == nu.end() && iv == nv.end();
}

TypePartition compute_type_partition(const Graph& g) {
    TypePartition out;
    out.block_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool placed = false;
        for (std::size_t b = 0; b < out.blocks.size() && !placed; ++b) {
            // Same-type is an equivalence, so one representative suffices.
            if (same_type(g, out.blocks[b].vertices.front(), v)) {
                out.blocks[b].vertices.push_back(v);
                out.block_of[v] = static_cast<int>(b);
                placed = true;
            }
        }
        if (!placed) {
            out.blocks.push_back(TypeBlock{{v}, false});
            out.block_of[v] = static_cast<int>(out.blocks.size()) - 1;
        }
    }
    for (auto& block : out.blocks) {
        block.is_clique =
            block.vertices.size() >= 2 && g.has_edge(block.vertices[0], block.vertices[1]);
    }
    return out;
}

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("neighborhood-diversity kernels require a connected graph");
    }
}

// Decision for K_t with budget k: choosing delta vertices is valid iff
// delta = 0 with 0 in rho, or delta >= 1 with delta-1 in sigma and (delta = t
// or delta in rho). delta-1 in sigma caps the scan at max(sigma)+1.
bool complete_graph_answer(std::int64_t t, const SigmaRhoSpec& spec, std::int64_t k) {
    if (spec.rho.contains(0)) return true;
    std::int64_t cap = std::min({t, k, static_cast<std::int64_t>(spec.sigma.max_value()) + 1});
    for (std::int64_t delta = 1; delta <= cap; ++delta) {
        int d = static_cast<int>(delta);
        if (!spec.sigma.contains(d - 1)) continue;
        if (delta == t || spec.rho.contains(d)) return true;
    }
    return false;
}

// Shared trimming step: keep the keep_count lowest vertices of each block and
// attach weights; heavy_weight(i, t_i) returns the weight of the lowest kept
// vertex of a shrunk block.
NdKernel trim_blocks(const Graph& g, const TypePartition& partition, std::int64_t k,
                     int keep_limit, bool weighted, int light_count) {
    NdKernel out;
    out.budget_out = k;
    std::vector<std::int64_t> weight_of;  // parallel to kept_vertices
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        const auto& block = partition.blocks[b].vertices;
        auto t = static_cast<std::int64_t>(block.size());
        int keep = static_cast<int>(std::min<std::int64_t>(t, keep_limit));
        for (int i = 0; i < keep; ++i) {
            out.kept_vertices.push_back(block[static_cast<std::size_t>(i)]);
            out.kept_block.push_back(static_cast<int>(b));
            std::int64_t w = 1;
            if (weighted && t > keep_limit && i == 0) w = t - light_count;
            weight_of.push_back(w);
        }
    }
    // kept_vertices ascending overall: re-sort with the parallel arrays.
    std::vector<std::size_t> order(out.kept_vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
        return out.kept_vertices[a] < out.kept_vertices[c];
    });
    NdKernel sorted;
    sorted.budget_out = k;
    for (std::size_t i : order) {
        sorted.kept_vertices.push_back(out.kept_vertices[i]);
        sorted.kept_block.push_back(out.kept_block[i]);
        sorted.reduced.weights.push_back(weight_of[i]);
    }
    sorted.reduced.graph = induced_subgraph(g, sorted.kept_vertices);
    return sorted;
}

}  // namespace

NdKernel kernel_bounded(const Graph& g, const SigmaRhoSpec& spec, std::int64_t k) {
    if (!spec.sigma.is_finite() || !spec.rho.is_finite()) {
        throw UnsupportedSpecError("bounded kernel needs finite sigma and rho");
    }
    if (spec.sigma.values().empty() || spec.rho.values().empty()) {
        throw UnsupportedSpecError("sigma and rho must be non-empty");
    }
    require_connected(g);
    int limit = std::max(spec.sigma.max_value(), spec.rho.max_value()) + 1;
    TypePartition partition = compute_type_partition(g);
    // Truncating a complete graph is the one unsafe case: the surviving
    // clique may take all kept vertices, a choice the removed twins would
    // have vetoed, and no adjacent block exists to veto it either. (With a
    // second block, any neighbor of a fully-chosen truncated clique block
    // would see more than max(sigma) chosen vertices.) Complete inputs are
    // decided in closed form and the kept count lowered until the truncated
    // clique agrees; with non-empty rho some j <= limit always does.
    if (partition.blocks.size() == 1 && partition.blocks[0].is_clique &&
        g.vertex_count() > limit) {
        bool want = complete_graph_answer(g.vertex_count(), spec, k);
        for (int j = limit; j >= 1; --j) {
            if (complete_graph_answer(j, spec, k) == want) {
                return trim_blocks(g, partition, k, j, false, 0);
            }
        }
        throw std::logic_error("no clique of size <= max(s,r)+1 matches; rho was empty");
    }
    return trim_blocks(g, partition, k, limit, false, 0);
}

NdKernel kernel_rho_finite(const Graph& g, const SigmaRhoSpec& spec, std::int64_t k) {
    if (spec.sigma.kind() != NumberSet::Kind::AllNaturals) {
        throw UnsupportedSpecError("rho-finite kernel needs sigma = nat");
    }
    if (!spec.rho.is_finite() || spec.rho.values().empty()) {
        throw UnsupportedSpecError("rho-finite kernel needs finite non-empty rho");
    }
    require_connected(g);
    int r = spec.rho.max_value();
    TypePartition partition = compute_type_partition(g);
    // Shrunk blocks get r light vertices plus one of weight t_i - r.
    return trim_blocks(g, partition, k, r + 1, true, r);
}

NdKernel kernel_sigma_finite(const Graph& g, const SigmaRhoSpec& spec, std::int64_t k) {
    if (spec.rho.kind() != NumberSet::Kind::PositiveNaturals) {
        throw UnsupportedSpecError("sigma-finite kernel needs rho = nat+");
    }
    if (!spec.sigma.is_finite() || spec.sigma.values().empty()) {
        throw UnsupportedSpecError("sigma-finite kernel needs finite non-empty sigma");
    }
    require_connected(g);
    int s = spec.sigma.max_value();
    TypePartition partition = compute_type_partition(g);
    // Shrunk blocks get s+1 light vertices plus one of weight t_i - (s+1).
    return trim_blocks(g, partition, k, s + 2, true, s + 1);
}

namespace {

DominationAnswer enumerate_profiles(const Graph& g, const SigmaRhoSpec& spec, int per_block_limit,
                                    std::optional<std::int64_t> budget, std::int64_t profile_cap) {
    TypePartition partition = compute_type_partition(g);
    std::size_t b = partition.blocks.size();

    // Choices per block: {0, ..., min(limit, t_i)} plus t_i itself.
    std::vector<std::vector<std::int64_t>> choices(b);
    std::int64_t total = 1;
    for (std::size_t i = 0; i < b; ++i) {
        auto t = static_cast<std::int64_t>(partition.blocks[i].vertices.size());
        for (std::int64_t c = 0; c <= std::min<std::int64_t>(per_block_limit, t); ++c) {
            choices[i].push_back(c);
        }
        if (choices[i].back() != t) choices[i].push_back(t);
        if (total > profile_cap / static_cast<std::int64_t>(choices[i].size())) {
            throw CapExceededError("profile space exceeds cap");
        }
        total *= static_cast<std::int64_t>(choices[i].size());
    }

    DominationAnswer best;
    std::vector<std::size_t> pick(b, 0);
    for (;;) {
        std::vector<int> selected;
        std::int64_t count = 0;
        for (std::size_t i = 0; i < b; ++i) {
            std::int64_t c = choices[i][pick[i]];
            count += c;
            const auto& verts = partition.blocks[i].vertices;
            for (std::int64_t j = 0; j < c; ++j) selected.push_back(verts[static_cast<std::size_t>(j)]);
        }
        if (!best.exists || count < *best.cost) {
            VertexSet candidate(selected);
            if (is_sigma_rho_dominating(g, candidate, spec)) best = {true, candidate, count};
        }
        // odometer
        std::size_t i = 0;
        while (i < b && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == b) break;
    }
    if (best.exists && budget.has_value() && *best.cost > *budget) return {};
    return best;
}

}  // namespace

DominationAnswer nd_enumerate_solve(const Graph& g, const SigmaRhoSpec& spec,
                                    std::optional<std::int64_t> budget,
                                    std::int64_t profile_cap) {
    if (!spec.rho.is_finite() || spec.rho.values().empty()) {
        throw UnsupportedSpecError("profile enumeration needs finite non-empty rho");
    }
    return enumerate_profiles(g, spec, spec.rho.max_value(), budget, profile_cap);
}

DominationAnswer nd_enumerate_solve_sigma(const Graph& g, const SigmaRhoSpec& spec,
                                          std::optional<std::int64_t> budget,
                                          std::int64_t profile_cap) {
    if (!spec.sigma.is_finite() || spec.sigma.values().empty()) {
        throw UnsupportedSpecError("profile enumeration needs finite non-empty sigma");
    }
    if (spec.rho.kind() != NumberSet::Kind::PositiveNaturals) {
        throw UnsupportedSpecError("sigma-profile enumeration needs rho = nat+");
    }
    return enumerate_profiles(g, spec, spec.sigma.max_value() + 1, budget, profile_cap);
}

std::variant<NdKernel, DominationAnswer> kernelize_nd(const Graph& g, const SigmaRhoSpec& spec,
                                                      std::int64_t k, NdVariant variant) {
    if (variant == NdVariant::Bounded) return kernel_bounded(g, spec, k);

    TypePartition partition = compute_type_partition(g);
    auto b = static_cast<std::int64_t>(partition.blocks.size());
    // Weights can need more than b bits when n > 2^b; answer directly instead.
    bool fallback = b < 62 && g.vertex_count() > (std::int64_t(1) << b);
    if (variant == NdVariant::RhoFinite) {
        if (fallback) {
            if (spec.sigma.kind() != NumberSet::Kind::AllNaturals) {
                throw UnsupportedSpecError("rho-finite kernel needs sigma = nat");
            }
            if (!spec.rho.is_finite() || spec.rho.values().empty()) {
                throw UnsupportedSpecError("rho-finite kernel needs finite non-empty rho");
            }
            require_connected(g);
            return nd_enumerate_solve(g, spec, k);
        }
        return kernel_rho_finite(g, spec, k);
    }
    if (fallback) {
        if (!spec.sigma.is_finite() || spec.sigma.values().empty()) {
            throw UnsupportedSpecError("sigma-finite kernel needs finite non-empty sigma");
        }
        require_connected(g);
        return nd_enumerate_solve_sigma(g, spec, k);
    }
    return kernel_sigma_finite(g, spec, k);
}

}  // namespace sigmarho
