#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sigmarho/graph.hpp"
#include "sigmarho/sigma_rho.hpp"

namespace sigmarho {

// Modular-style decomposition tree. Leaves carry original vertex labels;
// every label appears exactly once.
struct DecompositionNode {
    enum class Type { Introduce, Union, Join, Substitution };

    Type type = Type::Introduce;
    int vertex = -1;                         // Introduce
    Graph base;                              // Substitution: pattern over the children
    std::vector<DecompositionNode> children; // Union >= 2, Join == 2, Substitution == base.n
};

// Structural sanity: arities, label bijection with 0..n-1. Throws
// std::invalid_argument on violation.
void validate_tree(const DecompositionNode& tree);

// Rebuilds the graph the tree denotes: Union keeps parts disjoint, Join adds
// all cross edges, Substitution joins children C_i, C_j exactly when (i,j) is
// a base edge.
Graph evaluate_tree(const DecompositionNode& tree);

// Leaf labels of the subtree, ascending.
std::vector<int> tree_vertices(const DecompositionNode& tree);

// Max base size over Substitution nodes; 2 when the tree is a cotree with at
// least one Union/Join, 1 for a single leaf.
int modular_width(const DecompositionNode& tree);

// Parenthesized term format: (leaf <v>) with 1-indexed labels,
// (union <t> <t> ...), (join <t> <t>), (subst <graph-file> <t> ...).
// load_graph resolves <graph-file> references for subst nodes.
DecompositionNode parse_decomposition(const std::string& text,
                                      const std::function<Graph(const std::string&)>& load_graph);

// Union over components, binary join over co-components, and a fallback
// Substitution node with the remaining graph itself as base (children are
// single leaves). Exact cotrees for cographs; always reconstructs g.
DecompositionNode decompose(const Graph& g);

// Efficient domination (sigma = {0}, rho = {1}) via the tree: Introduce keeps
// the vertex; Union combines children; Join succeeds iff one part has a
// universal vertex; Substitution tries, per child, its lowest-index universal
// vertex, over all subsets. Every candidate solution is re-validated against
// the subtree graph. Uses decompose(g) when no tree is given.
DominationAnswer solve_eds_modular(const Graph& g,
                                   const std::optional<DecompositionNode>& tree = std::nullopt);

// Total perfect domination (sigma = {1}, rho = {1}): Introduce fails; Join
// pairs isolated vertices of the two parts; Substitution tries lowest-index
// isolated vertices per child. Same re-validation contract.
DominationAnswer solve_ptds_modular(const Graph& g,
                                    const std::optional<DecompositionNode>& tree = std::nullopt);

}  // namespace sigmarho
