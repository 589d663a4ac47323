#include "sigmarho/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sigmarho/errors.hpp"

namespace sigmarho {

VertexSet::VertexSet(std::vector<int> vertices) : values_(std::move(vertices)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) values_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it != values_.end() && *it == v) values_.erase(it);
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

namespace {

// Header "p edge <n> <m>", optional "w <v> <weight>" lines, "e <u> <v>" lines
// with 1-indexed endpoints, "c" comments. Weights default to 1.
WeightedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    WeightedGraph out;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;

        if (tag == "p") {
            if (have_header) throw ParseError("duplicate problem line", lineno);
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0) {
                throw ParseError("malformed problem line, expected 'p edge <n> <m>'", lineno);
            }
            out.graph = Graph(static_cast<int>(n));
            out.weights.assign(static_cast<std::size_t>(n), 1);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("'" + tag + "' line before problem line", lineno);

        if (tag == "e") {
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("malformed edge line", lineno);
            int n = out.graph.vertex_count();
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError("edge endpoint out of range", lineno);
            }
            if (u == v) throw ParseError("self-loop", lineno);
            out.graph.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else if (tag == "w") {
            long long v = 0, weight = 0;
            if (!(ls >> v >> weight)) throw ParseError("malformed weight line", lineno);
            if (v < 1 || v > out.graph.vertex_count()) {
                throw ParseError("weight vertex out of range", lineno);
            }
            if (weight < 1) throw ParseError("weights must be >= 1", lineno);
            out.weights[static_cast<std::size_t>(v) - 1] = weight;
        } else {
            throw ParseError("unknown line tag '" + tag + "'", lineno);
        }
    }
    if (!have_header) throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) { return parse_dimacs(text).graph; }

WeightedGraph parse_weighted_graph(const std::string& text) { return parse_dimacs(text); }

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
        }
    }
    return out.str();
}

std::string serialize_weighted_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.graph.vertex_count() << " " << g.graph.edge_count() << "\n";
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
        if (g.weights[v] != 1) out << "w " << v + 1 << " " << g.weights[v] << "\n";
    }
    for (int u = 0; u < g.graph.vertex_count(); ++u) {
        for (int v : g.graph.neighbors(u)) {
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
        }
    }
    return out.str();
}

Graph generate_random(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // Top 53 bits -> uniform double in [0, 1); avoids distribution
            // objects, whose output is implementation-defined.
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) g.add_edge(u, v);
        }
    }
    return g;
}

Graph generate_random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = generate_random(n, p, seed + attempt * 0x9e3779b97f4a7c15ULL);
        if (is_connected(g)) return g;
        if (attempt > 100000) throw std::runtime_error("no connected draw found");
    }
}

bool verify_modulator(const Graph& g, const VertexSet& s, int d) {
    if (d < 0) return false;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        int residual = 0;
        for (int u : g.neighbors(v)) {
            if (!s.contains(u)) ++residual;
        }
        if (residual > d) return false;
    }
    return true;
}

namespace {

// Branching for degree-d deletion: pick the lowest vertex with residual
// degree > d; some deleted set must contain it or one of its first d+1
// residual neighbors.
bool modulator_search(const Graph& g, int d, int budget, std::vector<char>& removed,
                      std::vector<int>& out) {
    int pick = -1;
    std::vector<int> residual;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        residual.clear();
        for (int u : g.neighbors(v)) {
            if (!removed[u]) {
                residual.push_back(u);
                if (static_cast<int>(residual.size()) > d) break;
            }
        }
        if (static_cast<int>(residual.size()) > d) {
            pick = v;
            break;
        }
    }
    if (pick == -1) return true;
    if (budget == 0) return false;

    std::vector<int> branch;
    branch.push_back(pick);
    for (int u : g.neighbors(pick)) {
        if (!removed[u] && static_cast<int>(branch.size()) < d + 2) branch.push_back(u);
    }
    for (int w : branch) {
        removed[w] = 1;
        out.push_back(w);
        if (modulator_search(g, d, budget - 1, removed, out)) return true;
        out.pop_back();
        removed[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<VertexSet> compute_degree_d_modulator(const Graph& g, int d,
                                                    std::optional<int> budget) {
    if (d < 0) throw std::invalid_argument("negative degree bound");
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> picked;
    if (budget.has_value()) {
        if (*budget < 0) return std::nullopt;
        if (modulator_search(g, d, *budget, removed, picked)) return VertexSet(picked);
        return std::nullopt;
    }
    for (int k = 0; k <= g.vertex_count(); ++k) {
        std::fill(removed.begin(), removed.end(), 0);
        picked.clear();
        if (modulator_search(g, d, k, removed, picked)) return VertexSet(picked);
    }
    return std::nullopt;  // unreachable: S = V always works
}

std::optional<VertexSet> compute_vertex_cover(const Graph& g, std::optional<int> budget) {
    return compute_degree_d_modulator(g, 0, budget);
}

VertexSet approx_vertex_cover(const Graph& g) {
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (covered[u]) continue;
        for (int v : g.neighbors(u)) {
            if (!covered[v]) {
                covered[u] = covered[v] = 1;
                out.push_back(u);
                out.push_back(v);
                break;
            }
        }
    }
    return VertexSet(out);
}

VertexSet approx_degree_d_modulator(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("negative degree bound");
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::vector<int> out;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!removed[v] && deg[v] > d && (pick == -1 || deg[v] > deg[pick])) pick = v;
        }
        if (pick == -1) break;
        removed[pick] = 1;
        out.push_back(pick);
        for (int u : g.neighbors(pick)) {
            if (!removed[u]) --deg[u];
        }
    }
    return VertexSet(out);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (comp[start] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.vertex_count()) {
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        }
        index[vs[i]] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(vs.size()));
    for (int v : vs) {
        for (int u : g.neighbors(v)) {
            if (u > v && index[u] != -1) out.add_edge(index[v], index[u]);
        }
    }
    return out;
}

Graph complement_graph(const Graph& g) {
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

}  // namespace sigmarho
