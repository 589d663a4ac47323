#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "sigmarho/errors.hpp"
#include "sigmarho/graph.hpp"

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

// Exhaustive minimum over all subsets; the reference the branching solvers
// are tested against.
std::optional<VertexSet> min_modulator_brute(const Graph& g, int d) {
    int n = g.vertex_count();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s(idx);
            if (verify_modulator(g, s, d)) return s;
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(std::vector<int>{3, 1, 3, 2});
    CHECK(s.size() == 3);
    CHECK(s.values() == std::vector<int>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    s.insert(0);
    s.insert(2);  // idempotent
    CHECK(s.values() == std::vector<int>{0, 1, 2, 3});
    s.erase(1);
    CHECK(s.values() == std::vector<int>{0, 2, 3});
    CHECK(VertexSet{} == VertexSet(std::vector<int>{}));
}

TEST_CASE("graph construction invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate is a no-op
    g.add_edge(3, 1);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 3});
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(2) == 0);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
}

TEST_CASE("dimacs parsing") {
    SUBCASE("path on 3 vertices") {
        Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SUBCASE("edgeless header") {
        Graph g = parse_graph("p edge 2 0\n");
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("comments and duplicate edges tolerated") {
        Graph g = parse_graph("c a comment\np edge 3 2\nc mid\ne 1 2\ne 2 1\n");
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("self-loop rejected with line number") {
        try {
            parse_graph("p edge 2 1\ne 1 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("other malformed inputs") {
        CHECK_THROWS_AS(parse_graph(""), ParseError);
        CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);            // edge before header
        CHECK_THROWS_AS(parse_graph("p edge 2 0\np edge 2 0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);  // out of range
        CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("p edge 2 1\nq 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("p node 2 1\n"), ParseError);
    }
    SUBCASE("weighted graphs") {
        WeightedGraph wg = parse_weighted_graph("p edge 3 1\ne 1 2\nw 2 5\n");
        CHECK(wg.weights == std::vector<std::int64_t>{1, 5, 1});
        CHECK_THROWS_AS(parse_weighted_graph("p edge 2 0\nw 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_weighted_graph("p edge 2 0\nw 3 1\n"), ParseError);
    }
}

TEST_CASE("serialize round-trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_random(9, 0.4, seed);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    WeightedGraph wg{path(3), {2, 1, 7}};
    WeightedGraph back = parse_weighted_graph(serialize_weighted_graph(wg));
    CHECK(back.graph == wg.graph);
    CHECK(back.weights == wg.weights);
}

TEST_CASE("random generation") {
    CHECK(generate_random(4, 0.0, 9).edge_count() == 0);
    CHECK(generate_random(4, 1.0, 9) == complete(4));
    CHECK(generate_random(10, 0.5, 7) == generate_random(10, 0.5, 7));
    CHECK(generate_random(10, 0.5, 7) != generate_random(10, 0.5, 8));
    Graph g = generate_random_connected(9, 0.3, 5);
    CHECK(is_connected(g));
    CHECK(g == generate_random_connected(9, 0.3, 5));
}

TEST_CASE("verify_modulator") {
    Graph k4 = complete(4);
    CHECK(verify_modulator(k4, VertexSet({0, 1}), 1));
    CHECK_FALSE(verify_modulator(k4, VertexSet({0}), 1));
    CHECK(verify_modulator(k4, VertexSet({0, 1, 2, 3}), 0));
    CHECK(verify_modulator(path(3), VertexSet({1}), 0));
}

TEST_CASE("vertex cover") {
    SUBCASE("pinned instances") {
        auto cover = compute_vertex_cover(path(3));
        REQUIRE(cover.has_value());
        CHECK(cover->values() == std::vector<int>{1});
        CHECK_FALSE(compute_vertex_cover(complete(4), 2).has_value());
        CHECK(compute_vertex_cover(complete(4), 3).has_value());
        CHECK(compute_vertex_cover(Graph(5))->size() == 0);
    }
    SUBCASE("minimum size matches exhaustive search") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            int n = 5 + static_cast<int>(seed % 5);
            Graph g = generate_random(n, 0.45, 100 + seed);
            auto got = compute_vertex_cover(g);
            auto want = min_modulator_brute(g, 0);
            REQUIRE(got.has_value());
            REQUIRE(want.has_value());
            CHECK(got->size() == want->size());
            CHECK(verify_modulator(g, *got, 0));
        }
    }
    SUBCASE("budget contract") {
        Graph g = cycle(6);  // minimum cover 3
        CHECK_FALSE(compute_vertex_cover(g, 2).has_value());
        auto c = compute_vertex_cover(g, 4);
        REQUIRE(c.has_value());
        CHECK(c->size() <= 4);
        CHECK(verify_modulator(g, *c, 0));
    }
}

TEST_CASE("degree-d modulator") {
    SUBCASE("pinned instances") {
        auto m = compute_degree_d_modulator(complete(3), 1);
        REQUIRE(m.has_value());
        CHECK(m->size() == 1);
        CHECK_FALSE(compute_degree_d_modulator(path(5), 1, 0).has_value());
        CHECK(compute_degree_d_modulator(path(5), 2, 0)->size() == 0);
    }
    SUBCASE("minimum size matches exhaustive search for d in 0..2") {
        for (std::uint64_t seed = 0; seed < 9; ++seed) {
            Graph g = generate_random(7, 0.5, 200 + seed);
            for (int d = 0; d <= 2; ++d) {
                auto got = compute_degree_d_modulator(g, d);
                auto want = min_modulator_brute(g, d);
                REQUIRE(got.has_value());
                CHECK(got->size() == want->size());
                CHECK(verify_modulator(g, *got, d));
            }
        }
    }
}

TEST_CASE("approximations") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = generate_random(9, 0.4, 300 + seed);
        VertexSet vc = approx_vertex_cover(g);
        CHECK(verify_modulator(g, vc, 0));
        CHECK(vc.size() <= 2 * min_modulator_brute(g, 0)->size());
        for (int d = 1; d <= 2; ++d) {
            CHECK(verify_modulator(g, approx_degree_d_modulator(g, d), d));
        }
    }
}

TEST_CASE("components and derived graphs") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3, 4});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(path(4)));
    CHECK(is_connected(Graph(1)));

    Graph sub = induced_subgraph(cycle(5), {0, 1, 2});
    CHECK(sub == path(3));
    Graph co = complement_graph(path(3));
    CHECK(co.edge_count() == 1);
    CHECK(co.has_edge(0, 2));
}
