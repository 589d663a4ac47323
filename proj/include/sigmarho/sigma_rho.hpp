#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmarho/config.hpp"
#include "sigmarho/graph.hpp"

namespace sigmarho {

// A set of non-negative integers: an explicit finite list, all naturals
// {0,1,2,...}, or the positive naturals {1,2,3,...}.
class NumberSet {
public:
    enum class Kind { Finite, AllNaturals, PositiveNaturals };

    NumberSet() = default;
    static NumberSet finite(std::vector<int> values);  // values >= 0, dedup + sort
    static NumberSet naturals();
    static NumberSet positive_naturals();

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool contains(int c) const;

    // Finite-only accessors.
    const std::vector<int>& values() const;
    int max_value() const;

    std::string to_string() const;  // "{0,2,4}", "nat", "nat+"
    bool operator==(const NumberSet&) const = default;

private:
    Kind kind_ = Kind::Finite;
    std::vector<int> values_;
};

struct SigmaRhoSpec {
    NumberSet sigma;
    NumberSet rho;

    // 0 in rho makes "dominated by nobody" acceptable; callers may warn.
    bool zero_in_rho() const { return rho.contains(0); }
    std::string to_string() const;
    bool operator==(const SigmaRhoSpec&) const = default;
};

// Standard problem names: efficient-dominating, perfect-dominating,
// total-perfect-dominating, independent-dominating, weakly-perfect-dominating,
// dominating-induced-matching, [i,j]-dominating, total-[i,j]-dominating
// (the last two with literal integers, e.g. "[1,2]-dominating").
SigmaRhoSpec preset(const std::string& name);
const std::vector<std::string>& preset_names();

// "0,2,4" -> finite {0,2,4}; "nat" -> naturals; "nat+" -> positive naturals.
NumberSet parse_number_set(const std::string& text);

struct DominationAnswer {
    bool exists = false;
    std::optional<VertexSet> witness;
    std::optional<std::int64_t> cost;  // cardinality, or total weight for weighted solvers
};

// Every v in dset has |N(v) ^ dset| in sigma, every v outside has it in rho.
bool is_sigma_rho_dominating(const Graph& g, const VertexSet& dset, const SigmaRhoSpec& spec);

// Exhaustive oracle. Enumerates subsets by size, lexicographically within a
// size, and returns the first valid one (so: a minimum-size witness, and the
// lexicographically least among those). With a budget: first valid set of
// size <= budget. Throws CapExceededError when vertex_count > cap.
DominationAnswer brute_force(const Graph& g, const SigmaRhoSpec& spec,
                             std::optional<std::int64_t> budget = std::nullopt,
                             int cap = oracle_vertex_cap());

// Same enumeration order, minimizing total weight; ties keep the first
// witness encountered. With a budget: first valid set of weight <= budget.
DominationAnswer brute_force_weighted(const WeightedGraph& g, const SigmaRhoSpec& spec,
                                      std::optional<std::int64_t> budget = std::nullopt,
                                      int cap = oracle_vertex_cap());

}  // namespace sigmarho
