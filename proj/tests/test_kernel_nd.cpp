#include "doctest.h"

#include <algorithm>
#include <variant>
#include <vector>

#include "sigmarho/errors.hpp"
#include "sigmarho/kernel_nd.hpp"

using namespace sigmarho;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

void check_partition_invariants(const Graph& g, const TypePartition& tp) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t b = 0; b < tp.blocks.size(); ++b) {
        const auto& block = tp.blocks[b];
        REQUIRE_FALSE(block.vertices.empty());
        CHECK(std::is_sorted(block.vertices.begin(), block.vertices.end()));
        for (int v : block.vertices) {
            ++seen[static_cast<std::size_t>(v)];
            CHECK(tp.block_of[static_cast<std::size_t>(v)] == static_cast<int>(b));
        }
        // Same-type within; clique/independent classification.
        for (std::size_t i = 0; i < block.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < block.vertices.size(); ++j) {
                int u = block.vertices[i], v = block.vertices[j];
                CHECK(same_type(g, u, v));
                CHECK(g.has_edge(u, v) == block.is_clique);
            }
        }
        if (block.vertices.size() == 1) CHECK_FALSE(block.is_clique);
    }
    for (int s : seen) CHECK(s == 1);  // exact partition

    // All-or-nothing edges between blocks.
    for (std::size_t a = 0; a < tp.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < tp.blocks.size(); ++b) {
            int edges = 0;
            for (int u : tp.blocks[a].vertices) {
                for (int v : tp.blocks[b].vertices) edges += g.has_edge(u, v) ? 1 : 0;
            }
            bool all = edges == static_cast<int>(tp.blocks[a].vertices.size() *
                                                 tp.blocks[b].vertices.size());
            CHECK((edges == 0 || all));
        }
    }
    // Coarseness: no two distinct blocks can merge.
    for (std::size_t a = 0; a < tp.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < tp.blocks.size(); ++b) {
            CHECK_FALSE(same_type(g, tp.blocks[a].vertices[0], tp.blocks[b].vertices[0]));
        }
    }
}

}  // namespace

TEST_CASE("type partition") {
    SUBCASE("pinned shapes") {
        TypePartition kn = compute_type_partition(complete(5));
        REQUIRE(kn.blocks.size() == 1);
        CHECK(kn.blocks[0].is_clique);

        TypePartition st = compute_type_partition(star(3));
        REQUIRE(st.blocks.size() == 2);
        CHECK(st.blocks[0].vertices == std::vector<int>{0});
        CHECK_FALSE(st.blocks[0].is_clique);
        CHECK(st.blocks[1].vertices == std::vector<int>{1, 2, 3});
        CHECK_FALSE(st.blocks[1].is_clique);

        TypePartition c4 = compute_type_partition(cycle(4));
        REQUIRE(c4.blocks.size() == 2);
        CHECK(c4.blocks[0].vertices == std::vector<int>{0, 2});
        CHECK(c4.blocks[1].vertices == std::vector<int>{1, 3});
    }
    SUBCASE("invariants on random graphs") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Graph g = generate_random(4 + static_cast<int>(seed % 8), 0.5, 1200 + seed);
            check_partition_invariants(g, compute_type_partition(g));
        }
    }
}

TEST_CASE("kernel_bounded") {
    SigmaRhoSpec eds = preset("efficient-dominating");
    SUBCASE("large star collapses") {
        NdKernel kr = kernel_bounded(star(100), eds, 1);
        CHECK(kr.reduced.graph.vertex_count() == 3);  // center + 2 leaves
        CHECK(kr.budget_out == 1);
        CHECK(brute_force(kr.reduced.graph, eds).exists);
        CHECK(kr.kept_vertices == std::vector<int>{0, 1, 2});
        CHECK(kr.kept_block == std::vector<int>{0, 1, 1});
    }
    SUBCASE("small graph unchanged") {
        Graph g = path(3);
        NdKernel kr = kernel_bounded(g, eds, 2);
        CHECK(kr.reduced.graph == g);
        CHECK(std::all_of(kr.reduced.weights.begin(), kr.reduced.weights.end(),
                          [](std::int64_t w) { return w == 1; }));
    }
    SUBCASE("size bound and budget-k answer preservation") {
        SigmaRhoSpec spec = preset("total-[1,2]-dominating");
        int bound_per_block = 2 + 1;  // max(s, r) + 1 with s = r = 2
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Graph g = generate_random_connected(4 + static_cast<int>(seed % 9), 0.4,
                                                1300 + seed);
            int b = static_cast<int>(compute_type_partition(g).blocks.size());
            for (std::int64_t k = 1; k <= 4; ++k) {
                NdKernel kr = kernel_bounded(g, spec, k);
                CHECK(kr.reduced.graph.vertex_count() <= bound_per_block * b);
                CHECK(brute_force(g, spec, k).exists ==
                      brute_force(kr.reduced.graph, spec, k).exists);
            }
        }
    }
    SUBCASE("complete graphs keep fewer vertices when the truncation disagrees") {
        // K5 has no total perfect dominating set, but its naive 2-vertex
        // truncation K2 does (both vertices, nobody left outside). The kernel
        // must emit a clique with the right answer instead.
        SigmaRhoSpec tpds = preset("total-perfect-dominating");
        for (std::int64_t k = 1; k <= 4; ++k) {
            NdKernel kr = kernel_bounded(complete(5), tpds, k);
            CHECK(kr.reduced.graph.vertex_count() <= 2);
            CHECK(brute_force(kr.reduced.graph, tpds, k).exists ==
                  brute_force(complete(5), tpds, k).exists);
        }
        for (const char* name : {"efficient-dominating", "total-perfect-dominating",
                                 "weakly-perfect-dominating", "total-[1,2]-dominating"}) {
            SigmaRhoSpec spec = preset(name);
            int limit = std::max(spec.sigma.max_value(), spec.rho.max_value()) + 1;
            for (int t = 3; t <= 9; ++t) {
                for (std::int64_t k = 1; k <= 4; ++k) {
                    NdKernel kr = kernel_bounded(complete(t), spec, k);
                    CHECK(kr.reduced.graph.vertex_count() <= limit);
                    CHECK(brute_force(kr.reduced.graph, spec, k).exists ==
                          brute_force(complete(t), spec, k).exists);
                }
            }
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(kernel_bounded(Graph(3), preset("efficient-dominating"), 1),
                        std::invalid_argument);  // disconnected
        CHECK_THROWS_AS(kernel_bounded(path(3), preset("perfect-dominating"), 1),
                        UnsupportedSpecError);  // sigma infinite
    }
}

TEST_CASE("kernel_rho_finite") {
    SigmaRhoSpec perfect = preset("perfect-dominating");  // sigma = nat, rho = {1}
    SUBCASE("pinned K15 shrink") {
        NdKernel kr = kernel_rho_finite(star(5), perfect, 1);
        REQUIRE(kr.reduced.graph.vertex_count() == 3);
        CHECK(kr.kept_vertices == std::vector<int>{0, 1, 2});
        CHECK(kr.reduced.weights == std::vector<std::int64_t>{1, 4, 1});  // heavy leaf 1
        DominationAnswer a = brute_force_weighted(kr.reduced, perfect);
        REQUIRE(a.exists);
        CHECK(*a.cost == 1);
        CHECK(*brute_force(star(5), perfect).cost == 1);
    }
    SUBCASE("boundary block t = r + 1 keeps unit weights") {
        // C4 blocks {0,2},{1,3} have t = 2 = r + 1.
        NdKernel kr = kernel_rho_finite(cycle(4), perfect, 2);
        CHECK(kr.reduced.graph == cycle(4));
        CHECK(kr.reduced.weights == std::vector<std::int64_t>{1, 1, 1, 1});
    }
    SUBCASE("budget-k equivalence and weight conservation") {
        for (const auto rho : {std::vector<int>{1}, std::vector<int>{1, 2}}) {
            SigmaRhoSpec spec{NumberSet::naturals(), NumberSet::finite(rho)};
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                Graph g = generate_random_connected(4 + static_cast<int>(seed % 9), 0.45,
                                                    1400 + seed);
                TypePartition tp = compute_type_partition(g);
                NdKernel kr = kernel_rho_finite(g, spec, 3);
                std::vector<std::int64_t> block_weight(tp.blocks.size(), 0);
                for (std::size_t i = 0; i < kr.kept_vertices.size(); ++i) {
                    block_weight[static_cast<std::size_t>(kr.kept_block[i])] +=
                        kr.reduced.weights[i];
                }
                for (std::size_t b = 0; b < tp.blocks.size(); ++b) {
                    CHECK(block_weight[b] ==
                          static_cast<std::int64_t>(tp.blocks[b].vertices.size()));
                }
                for (std::int64_t k = 1; k <= 4; ++k) {
                    NdKernel kk = kernel_rho_finite(g, spec, k);
                    CHECK(brute_force(g, spec, k).exists ==
                          brute_force_weighted(kk.reduced, spec, k).exists);
                }
            }
        }
    }
    SUBCASE("spec shape enforced") {
        CHECK_THROWS_AS(kernel_rho_finite(path(3), preset("efficient-dominating"), 1),
                        UnsupportedSpecError);
        CHECK_THROWS_AS(
            kernel_rho_finite(path(3), preset("dominating-induced-matching"), 1),
            UnsupportedSpecError);
    }
}

TEST_CASE("kernel_sigma_finite") {
    SigmaRhoSpec ids = preset("independent-dominating");  // sigma = {0}, rho = nat+
    SUBCASE("pinned star shrink: keep s+2 = 2 per big block") {
        NdKernel kr = kernel_sigma_finite(star(5), ids, 1);
        REQUIRE(kr.reduced.graph.vertex_count() == 3);
        CHECK(kr.reduced.weights == std::vector<std::int64_t>{1, 4, 1});
    }
    SUBCASE("block of size s+2 kept whole with unit weights") {
        // P4: blocks {0,3} and {1,2}; t = 2 = s + 2 for s = 0.
        NdKernel kr = kernel_sigma_finite(path(4), ids, 2);
        CHECK(kr.reduced.graph == path(4));
        CHECK(kr.reduced.weights == std::vector<std::int64_t>{1, 1, 1, 1});
    }
    SUBCASE("complete graphs collapse to two vertices") {
        NdKernel kr = kernel_sigma_finite(complete(9), ids, 1);
        CHECK(kr.reduced.graph.vertex_count() == 2);
        DominationAnswer a = brute_force_weighted(kr.reduced, ids);
        REQUIRE(a.exists);
        CHECK(*a.cost == 1);
    }
    SUBCASE("budget-k equivalence") {
        for (const char* name : {"independent-dominating", "dominating-induced-matching"}) {
            SigmaRhoSpec spec = preset(name);
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                Graph g = generate_random_connected(4 + static_cast<int>(seed % 9), 0.45,
                                                    1500 + seed);
                for (std::int64_t k = 1; k <= 4; ++k) {
                    NdKernel kr = kernel_sigma_finite(g, spec, k);
                    CHECK(brute_force(g, spec, k).exists ==
                          brute_force_weighted(kr.reduced, spec, k).exists);
                }
            }
        }
    }
    SUBCASE("spec shape enforced") {
        CHECK_THROWS_AS(kernel_sigma_finite(path(3), preset("perfect-dominating"), 1),
                        UnsupportedSpecError);
        CHECK_THROWS_AS(kernel_sigma_finite(path(3), preset("efficient-dominating"), 1),
                        UnsupportedSpecError);
    }
}

TEST_CASE("nd_enumerate_solve") {
    SUBCASE("pinned answers") {
        for (int n = 2; n <= 8; ++n) {
            DominationAnswer a = nd_enumerate_solve(complete(n), preset("efficient-dominating"));
            REQUIRE(a.exists);
            CHECK(*a.cost == 1);
        }
        // Edgeless with sigma = rho = {1}: nobody can ever see a neighbor.
        CHECK_FALSE(nd_enumerate_solve(Graph(3), preset("total-perfect-dominating")).exists);
    }
    SUBCASE("oracle agreement, unweighted") {
        for (const char* name : {"perfect-dominating", "efficient-dominating"}) {
            SigmaRhoSpec spec = preset(name);
            for (std::uint64_t seed = 0; seed < 30; ++seed) {
                Graph g = generate_random(4 + static_cast<int>(seed % 9), 0.5, 1600 + seed);
                DominationAnswer got = nd_enumerate_solve(g, spec);
                DominationAnswer want = brute_force(g, spec);
                CHECK(got.exists == want.exists);
                if (got.exists) {
                    CHECK(*got.cost == *want.cost);
                    CHECK(is_sigma_rho_dominating(g, *got.witness, spec));
                }
            }
        }
    }
    SUBCASE("budget respected") {
        Graph g = path(6);
        SigmaRhoSpec spec = preset("perfect-dominating");
        std::int64_t need = *brute_force(g, spec).cost;
        CHECK_FALSE(nd_enumerate_solve(g, spec, need - 1).exists);
        CHECK(nd_enumerate_solve(g, spec, need).exists);
    }
    SUBCASE("profile cap") {
        CHECK_THROWS_AS(nd_enumerate_solve(path(12), preset("perfect-dominating"),
                                           std::nullopt, 100),
                        CapExceededError);
    }
    SUBCASE("sigma-side variant agrees with the oracle") {
        for (const char* name : {"independent-dominating", "dominating-induced-matching"}) {
            SigmaRhoSpec spec = preset(name);
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                Graph g = generate_random(4 + static_cast<int>(seed % 9), 0.5, 1700 + seed);
                DominationAnswer got = nd_enumerate_solve_sigma(g, spec);
                DominationAnswer want = brute_force(g, spec);
                CHECK(got.exists == want.exists);
                if (got.exists) {
                    CHECK(*got.cost == *want.cost);
                    CHECK(is_sigma_rho_dominating(g, *got.witness, spec));
                }
            }
        }
    }
}

TEST_CASE("kernelize_nd routing") {
    SUBCASE("bounded variant always kernels") {
        auto out = kernelize_nd(star(100), preset("efficient-dominating"), 1,
                                NdVariant::Bounded);
        CHECK(std::holds_alternative<NdKernel>(out));
    }
    SUBCASE("weighted variants fall back when n > 2^b") {
        // K15: n = 6 > 2^2 = 4 blocks^2... two blocks, 2^2 = 4 < 6.
        auto out = kernelize_nd(star(5), preset("perfect-dominating"), 1,
                                NdVariant::RhoFinite);
        REQUIRE(std::holds_alternative<DominationAnswer>(out));
        const auto& a = std::get<DominationAnswer>(out);
        REQUIRE(a.exists);
        CHECK(*a.cost == 1);

        auto out2 = kernelize_nd(star(5), preset("independent-dominating"), 3,
                                 NdVariant::SigmaFinite);
        REQUIRE(std::holds_alternative<DominationAnswer>(out2));
        CHECK(std::get<DominationAnswer>(out2).exists);
    }
    SUBCASE("weighted variants kernel when weights fit") {
        // C6 has 6 singleton blocks: 2^6 = 64 >= 6, so no fallback.
        auto out = kernelize_nd(cycle(6), preset("perfect-dominating"), 2,
                                NdVariant::RhoFinite);
        REQUIRE(std::holds_alternative<NdKernel>(out));
        const auto& kr = std::get<NdKernel>(out);
        std::int64_t b = 6;
        for (std::int64_t w : kr.reduced.weights) CHECK(w <= (std::int64_t(1) << b));
    }
    SUBCASE("fallback answers match the oracle") {
        // Big complete bipartite-ish shapes: few blocks, many vertices.
        Graph g(10);
        for (int u = 0; u < 5; ++u) {
            for (int v = 5; v < 10; ++v) g.add_edge(u, v);
        }
        auto out = kernelize_nd(g, preset("perfect-dominating"), 4, NdVariant::RhoFinite);
        REQUIRE(std::holds_alternative<DominationAnswer>(out));  // b=2, 2^2 < 10
        DominationAnswer want = brute_force(g, preset("perfect-dominating"), 4);
        CHECK(std::get<DominationAnswer>(out).exists == want.exists);
    }
}
