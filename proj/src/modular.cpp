#include "sigmarho/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sigmarho/errors.hpp"

namespace sigmarho {

namespace {

void collect_vertices(const DecompositionNode& node, std::vector<int>& out) {
    if (node.type == DecompositionNode::Type::Introduce) {
        out.push_back(node.vertex);
        return;
    }
    for (const auto& child : node.children) collect_vertices(child, out);
}

void validate_node(const DecompositionNode& node) {
    using Type = DecompositionNode::Type;
    switch (node.type) {
        case Type::Introduce:
            if (node.vertex < 0) throw std::invalid_argument("leaf with negative label");
            if (!node.children.empty()) throw std::invalid_argument("leaf with children");
            return;
        case Type::Union:
            if (node.children.size() < 2) throw std::invalid_argument("union needs >= 2 children");
            break;
        case Type::Join:
            if (node.children.size() != 2) {
                throw std::invalid_argument("join needs exactly 2 children");
            }
            break;
        case Type::Substitution:
            if (node.children.empty()) throw std::invalid_argument("subst needs children");
            if (node.base.vertex_count() != static_cast<int>(node.children.size())) {
                throw std::invalid_argument("subst base size must equal child count");
            }
            break;
    }
    for (const auto& child : node.children) validate_node(child);
}

}  // namespace

std::vector<int> tree_vertices(const DecompositionNode& tree) {
    std::vector<int> out;
    collect_vertices(tree, out);
    std::sort(out.begin(), out.end());
    return out;
}

void validate_tree(const DecompositionNode& tree) {
    validate_node(tree);
    std::vector<int> labels = tree_vertices(tree);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != static_cast<int>(i)) {
            throw std::invalid_argument("leaf labels must be a bijection with 0..n-1");
        }
    }
}

namespace {

// Returns the subtree's vertex labels (unsorted, leaf order) while adding the
// subtree's edges to g.
std::vector<int> build_edges(const DecompositionNode& node, Graph& g) {
    using Type = DecompositionNode::Type;
    if (node.type == Type::Introduce) return {node.vertex};

    std::vector<std::vector<int>> parts;
    parts.reserve(node.children.size());
    for (const auto& child : node.children) parts.push_back(build_edges(child, g));

    if (node.type == Type::Join) {
        for (int u : parts[0]) {
            for (int v : parts[1]) g.add_edge(u, v);
        }
    } else if (node.type == Type::Substitution) {
        for (int i = 0; i < node.base.vertex_count(); ++i) {
            for (int j : node.base.neighbors(i)) {
                if (j <= i) continue;
                for (int u : parts[static_cast<std::size_t>(i)]) {
                    for (int v : parts[static_cast<std::size_t>(j)]) g.add_edge(u, v);
                }
            }
        }
    }

    std::vector<int> all;
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    return all;
}

}  // namespace

Graph evaluate_tree(const DecompositionNode& tree) {
    validate_tree(tree);
    std::vector<int> labels = tree_vertices(tree);
    Graph g(static_cast<int>(labels.size()));
    build_edges(tree, g);
    return g;
}

int modular_width(const DecompositionNode& tree) {
    using Type = DecompositionNode::Type;
    int best = tree.type == Type::Introduce ? 1 : 2;
    if (tree.type == Type::Substitution) best = std::max(best, tree.base.vertex_count());
    for (const auto& child : tree.children) best = std::max(best, modular_width(child));
    return best;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                     text[pos] == '\r')) {
            if (text[pos] == '\n') ++line;
            ++pos;
        }
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        if (pos >= text.size()) throw ParseError("unexpected end of input", line);
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "', found '" + text[pos] + "'", line);
        }
        ++pos;
    }
    std::string atom() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '(' && text[pos] != ')' && text[pos] != ' ' &&
               text[pos] != '\t' && text[pos] != '\n' && text[pos] != '\r') {
            ++pos;
        }
        if (start == pos) throw ParseError("expected a token", line);
        return text.substr(start, pos - start);
    }
};

DecompositionNode parse_node(Lexer& lex,
                             const std::function<Graph(const std::string&)>& load_graph) {
    lex.expect('(');
    std::string head = lex.atom();
    DecompositionNode node;
    if (head == "leaf") {
        node.type = DecompositionNode::Type::Introduce;
        std::string label = lex.atom();
        try {
            node.vertex = std::stoi(label) - 1;  // file labels are 1-indexed
        } catch (const std::exception&) {
            throw ParseError("bad leaf label '" + label + "'", lex.line);
        }
        if (node.vertex < 0) throw ParseError("leaf labels start at 1", lex.line);
    } else if (head == "union" || head == "join") {
        node.type = head == "union" ? DecompositionNode::Type::Union
                                    : DecompositionNode::Type::Join;
        while (lex.peek() == '(') node.children.push_back(parse_node(lex, load_graph));
    } else if (head == "subst") {
        node.type = DecompositionNode::Type::Substitution;
        std::string file = lex.atom();
        try {
            node.base = load_graph(file);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError("cannot load base graph '" + file + "': " + e.what(), lex.line);
        }
        while (lex.peek() == '(') node.children.push_back(parse_node(lex, load_graph));
    } else {
        throw ParseError("unknown node kind '" + head + "'", lex.line);
    }
    lex.expect(')');
    int line = lex.line;
    try {
        validate_node(node);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line);
    }
    return node;
}

}  // namespace

DecompositionNode parse_decomposition(
    const std::string& text, const std::function<Graph(const std::string&)>& load_graph) {
    Lexer lex{text};
    DecompositionNode root = parse_node(lex, load_graph);
    if (!lex.at_end()) throw ParseError("trailing input after decomposition", lex.line);
    try {
        validate_tree(root);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lex.line);
    }
    return root;
}

namespace {

DecompositionNode decompose_subset(const Graph& g, const std::vector<int>& verts) {
    if (verts.size() == 1) {
        DecompositionNode leaf;
        leaf.type = DecompositionNode::Type::Introduce;
        leaf.vertex = verts[0];
        return leaf;
    }
    Graph local = induced_subgraph(g, verts);  // local i = verts[i], verts sorted

    auto components = connected_components(local);
    if (components.size() > 1) {
        DecompositionNode node;
        node.type = DecompositionNode::Type::Union;
        for (const auto& comp : components) {
            std::vector<int> sub;
            for (int v : comp) sub.push_back(verts[static_cast<std::size_t>(v)]);
            node.children.push_back(decompose_subset(g, sub));
        }
        return node;
    }

    auto co_components = connected_components(complement_graph(local));
    if (co_components.size() > 1) {
        // Fold co-components into binary joins, left to right.
        std::vector<int> first;
        for (int v : co_components[0]) first.push_back(verts[static_cast<std::size_t>(v)]);
        DecompositionNode acc = decompose_subset(g, first);
        for (std::size_t i = 1; i < co_components.size(); ++i) {
            std::vector<int> sub;
            for (int v : co_components[i]) sub.push_back(verts[static_cast<std::size_t>(v)]);
            DecompositionNode join;
            join.type = DecompositionNode::Type::Join;
            join.children.push_back(std::move(acc));
            join.children.push_back(decompose_subset(g, sub));
            acc = std::move(join);
        }
        return acc;
    }

    // Prime fallback: the remaining graph itself is the base pattern.
    DecompositionNode node;
    node.type = DecompositionNode::Type::Substitution;
    node.base = local;
    for (int v : verts) {
        DecompositionNode leaf;
        leaf.type = DecompositionNode::Type::Introduce;
        leaf.vertex = v;
        node.children.push_back(std::move(leaf));
    }
    return node;
}

}  // namespace

DecompositionNode decompose(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("cannot decompose the empty graph");
    std::vector<int> verts(static_cast<std::size_t>(g.vertex_count()));
    std::iota(verts.begin(), verts.end(), 0);
    return decompose_subset(g, verts);
}

namespace {

// Candidate filters for the two problems, over a part's local graph.
std::vector<int> universal_vertices(const Graph& local, const std::vector<int>& labels) {
    std::vector<int> out;
    for (int i = 0; i < local.vertex_count(); ++i) {
        if (local.degree(i) == local.vertex_count() - 1) {
            out.push_back(labels[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

std::vector<int> isolated_vertices(const Graph& local, const std::vector<int>& labels) {
    std::vector<int> out;
    for (int i = 0; i < local.vertex_count(); ++i) {
        if (local.degree(i) == 0) out.push_back(labels[static_cast<std::size_t>(i)]);
    }
    return out;
}

bool valid_on_subset(const Graph& g, const std::vector<int>& verts, const VertexSet& dset,
                     const SigmaRhoSpec& spec) {
    Graph local = induced_subgraph(g, verts);
    std::vector<int> mapped;
    for (int v : dset) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        mapped.push_back(static_cast<int>(it - verts.begin()));
    }
    return is_sigma_rho_dominating(local, VertexSet(mapped), spec);
}

enum class Problem { Eds, Ptds };

struct SolveState {
    const Graph& g;
    SigmaRhoSpec spec;
    Problem problem;
};

// Returns the subtree's sorted vertex labels plus its solution, if any.
std::pair<std::vector<int>, std::optional<VertexSet>> solve_node(const SolveState& st,
                                                                 const DecompositionNode& node) {
    using Type = DecompositionNode::Type;

    if (node.type == Type::Introduce) {
        std::vector<int> verts{node.vertex};
        if (st.problem == Problem::Eds) {
            return {verts, VertexSet({node.vertex})};  // lone vertex: 0 neighbors in D
        }
        return {verts, std::nullopt};  // sigma = {1} is unreachable alone
    }

    std::vector<std::vector<int>> part_verts;
    std::vector<std::optional<VertexSet>> part_sols;
    for (const auto& child : node.children) {
        auto [verts, sol] = solve_node(st, child);
        part_verts.push_back(std::move(verts));
        part_sols.push_back(std::move(sol));
    }
    std::vector<int> all;
    for (const auto& pv : part_verts) all.insert(all.end(), pv.begin(), pv.end());
    std::sort(all.begin(), all.end());

    if (node.type == Type::Union) {
        VertexSet combined;
        for (const auto& sol : part_sols) {
            if (!sol.has_value()) return {all, std::nullopt};
            for (int v : *sol) combined.insert(v);
        }
        return {all, combined};
    }

    if (node.type == Type::Join) {
        Graph left = induced_subgraph(st.g, part_verts[0]);
        Graph right = induced_subgraph(st.g, part_verts[1]);
        if (st.problem == Problem::Eds) {
            // A solution is a single vertex universal in the joined graph,
            // i.e. universal inside its own part.
            std::vector<int> candidates = universal_vertices(left, part_verts[0]);
            std::vector<int> more = universal_vertices(right, part_verts[1]);
            candidates.insert(candidates.end(), more.begin(), more.end());
            std::sort(candidates.begin(), candidates.end());
            for (int u : candidates) {
                VertexSet d({u});
                if (valid_on_subset(st.g, all, d, st.spec)) return {all, d};
            }
            return {all, std::nullopt};
        }
        // Total perfect domination: one vertex isolated in each part.
        for (int u : isolated_vertices(left, part_verts[0])) {
            for (int v : isolated_vertices(right, part_verts[1])) {
                VertexSet d({u, v});
                if (valid_on_subset(st.g, all, d, st.spec)) return {all, d};
            }
        }
        return {all, std::nullopt};
    }

    // Substitution: at most one candidate per child (its lowest universal /
    // isolated vertex; candidates within a child are twins in the composed
    // graph), over all subsets.
    std::size_t m = node.children.size();
    if (m > 25) throw CapExceededError("substitution node with too many children");
    std::vector<int> candidate(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        Graph part = induced_subgraph(st.g, part_verts[i]);
        std::vector<int> cands = st.problem == Problem::Eds
                                     ? universal_vertices(part, part_verts[i])
                                     : isolated_vertices(part, part_verts[i]);
        if (!cands.empty()) candidate[i] = cands.front();
    }
    std::optional<VertexSet> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<int> chosen;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if ((mask >> i) & 1) {
                if (candidate[i] == -1) {
                    ok = false;
                } else {
                    chosen.push_back(candidate[i]);
                }
            }
        }
        if (!ok) continue;
        VertexSet d(chosen);
        if (!valid_on_subset(st.g, all, d, st.spec)) continue;
        if (!best.has_value() || d.values() < best->values()) best = d;
    }
    return {all, best};
}

DominationAnswer solve_modular(const Graph& g, const std::optional<DecompositionNode>& tree,
                               Problem problem, const SigmaRhoSpec& spec) {
    if (g.vertex_count() == 0) {
        return {true, VertexSet{}, 0};  // vacuously dominated
    }
    DecompositionNode local_tree = tree.has_value() ? *tree : decompose(g);
    if (evaluate_tree(local_tree) != g) {
        throw std::invalid_argument("decomposition tree does not reconstruct the graph");
    }
    SolveState st{g, spec, problem};
    auto [verts, sol] = solve_node(st, local_tree);
    if (!sol.has_value()) return {};
    if (!is_sigma_rho_dominating(g, *sol, spec)) {
        throw std::logic_error("modular solver produced an invalid witness");
    }
    return {true, *sol, sol->size()};
}

}  // namespace

DominationAnswer solve_eds_modular(const Graph& g, const std::optional<DecompositionNode>& tree) {
    return solve_modular(g, tree, Problem::Eds, preset("efficient-dominating"));
}

DominationAnswer solve_ptds_modular(const Graph& g, const std::optional<DecompositionNode>& tree) {
    return solve_modular(g, tree, Problem::Ptds, preset("total-perfect-dominating"));
}

}  // namespace sigmarho
