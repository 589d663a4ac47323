#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigmarho {

// Sorted set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> vertices);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const std::vector<int>& values() const { return values_; }

    std::vector<int>::const_iterator begin() const { return values_.begin(); }
    std::vector<int>::const_iterator end() const { return values_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> values_;  // strictly increasing
};

// Simple undirected graph: no self-loops, no parallel edges, symmetric
// adjacency, neighbor lists kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    // Adding an existing edge is a no-op; u == v or out-of-range throws.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Positive integer vertex weights; weights.size() == graph.vertex_count().
struct WeightedGraph {
    Graph graph;
    std::vector<std::int64_t> weights;

    bool operator==(const WeightedGraph&) const = default;
};

// Vertex set S such that G - S has maximum degree <= degree_bound.
struct Modulator {
    VertexSet vertices;
    int degree_bound = 0;
};

Graph parse_graph(const std::string& text);
WeightedGraph parse_weighted_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string serialize_weighted_graph(const WeightedGraph& g);

// G(n, p) with a fixed pair scan order and a fixed bit-to-[0,1) mapping, so
// one (n, p, seed) triple yields the same graph on every platform.
Graph generate_random(int n, double p, std::uint64_t seed);
// First connected draw from the seeded sequence above (n >= 1).
Graph generate_random_connected(int n, double p, std::uint64_t seed);

bool verify_modulator(const Graph& g, const VertexSet& s, int d);

// Exact bounded search tree. With a budget: any cover of size <= budget, or
// nullopt. Without: a minimum cover. Deterministic branch order.
std::optional<VertexSet> compute_vertex_cover(const Graph& g,
                                              std::optional<int> budget = std::nullopt);

// Exact degree-d-deletion set via (d+2)-way branching; d = 0 is the vertex
// cover case. Same budget contract as compute_vertex_cover.
std::optional<VertexSet> compute_degree_d_modulator(const Graph& g, int d,
                                                    std::optional<int> budget = std::nullopt);

// Maximal-matching 2-approximation (escape hatch for large instances).
VertexSet approx_vertex_cover(const Graph& g);
// Heuristic max-degree peeling until residual degree <= d; no ratio claim for d > 0.
VertexSet approx_degree_d_modulator(const Graph& g, int d);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Induced subgraph on `vertices` (sorted ascending); new index i = vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph complement_graph(const Graph& g);

}  // namespace sigmarho
