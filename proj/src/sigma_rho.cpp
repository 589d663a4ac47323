#include "sigmarho/sigma_rho.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sigmarho/errors.hpp"

namespace sigmarho {

NumberSet NumberSet::finite(std::vector<int> values) {
    for (int v : values) {
        if (v < 0) throw std::invalid_argument("number sets contain naturals only");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    NumberSet out;
    out.kind_ = Kind::Finite;
    out.values_ = std::move(values);
    return out;
}

NumberSet NumberSet::naturals() {
    NumberSet out;
    out.kind_ = Kind::AllNaturals;
    return out;
}

NumberSet NumberSet::positive_naturals() {
    NumberSet out;
    out.kind_ = Kind::PositiveNaturals;
    return out;
}

bool NumberSet::contains(int c) const {
    switch (kind_) {
        case Kind::AllNaturals: return c >= 0;
        case Kind::PositiveNaturals: return c >= 1;
        case Kind::Finite: return std::binary_search(values_.begin(), values_.end(), c);
    }
    return false;
}

const std::vector<int>& NumberSet::values() const {
    if (!is_finite()) throw UnsupportedSpecError("values() on an infinite number set");
    return values_;
}

int NumberSet::max_value() const {
    if (!is_finite()) throw UnsupportedSpecError("max_value() on an infinite number set");
    if (values_.empty()) throw UnsupportedSpecError("max_value() on an empty number set");
    return values_.back();
}

std::string NumberSet::to_string() const {
    switch (kind_) {
        case Kind::AllNaturals: return "nat";
        case Kind::PositiveNaturals: return "nat+";
        case Kind::Finite: break;
    }
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out << ",";
        out << values_[i];
    }
    out << "}";
    return out.str();
}

std::string SigmaRhoSpec::to_string() const {
    return "sigma=" + sigma.to_string() + " rho=" + rho.to_string();
}

namespace {

// "[i,j]" from names like "[1,2]-dominating"; returns {i, j}.
std::pair<int, int> parse_interval(const std::string& name, std::size_t open) {
    auto comma = name.find(',', open);
    auto close = name.find(']', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
        throw std::invalid_argument("bad interval in problem name '" + name + "'");
    }
    int i = std::stoi(name.substr(open + 1, comma - open - 1));
    int j = std::stoi(name.substr(comma + 1, close - comma - 1));
    if (i < 0 || j < i) throw std::invalid_argument("bad interval in problem name '" + name + "'");
    return {i, j};
}

std::vector<int> interval_values(int i, int j) {
    std::vector<int> out(static_cast<std::size_t>(j - i + 1));
    std::iota(out.begin(), out.end(), i);
    return out;
}

}  // namespace

SigmaRhoSpec preset(const std::string& name) {
    if (name == "efficient-dominating") {
        return {NumberSet::finite({0}), NumberSet::finite({1})};
    }
    if (name == "perfect-dominating") {
        return {NumberSet::naturals(), NumberSet::finite({1})};
    }
    if (name == "total-perfect-dominating") {
        return {NumberSet::finite({1}), NumberSet::finite({1})};
    }
    if (name == "independent-dominating") {
        return {NumberSet::finite({0}), NumberSet::positive_naturals()};
    }
    if (name == "weakly-perfect-dominating") {
        return {NumberSet::finite({0, 1}), NumberSet::finite({1})};
    }
    if (name == "dominating-induced-matching") {
        return {NumberSet::finite({1}), NumberSet::positive_naturals()};
    }
    if (name.rfind("total-[", 0) == 0) {
        auto [i, j] = parse_interval(name, 6);
        if (name != "total-[" + std::to_string(i) + "," + std::to_string(j) + "]-dominating") {
            throw std::invalid_argument("unknown problem name '" + name + "'");
        }
        return {NumberSet::finite(interval_values(i, j)), NumberSet::finite(interval_values(i, j))};
    }
    if (name.rfind("[", 0) == 0) {
        auto [i, j] = parse_interval(name, 0);
        if (name != "[" + std::to_string(i) + "," + std::to_string(j) + "]-dominating") {
            throw std::invalid_argument("unknown problem name '" + name + "'");
        }
        return {NumberSet::naturals(), NumberSet::finite(interval_values(i, j))};
    }
    throw std::invalid_argument("unknown problem name '" + name + "'");
}

NumberSet parse_number_set(const std::string& text) {
    if (text == "nat") return NumberSet::naturals();
    if (text == "nat+") return NumberSet::positive_naturals();
    std::vector<int> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number set '" + text +
                                        "', expected e.g. '0,2,4', 'nat', 'nat+'");
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("bad number set '" + text +
                                    "', expected e.g. '0,2,4', 'nat', 'nat+'");
    }
    return NumberSet::finite(std::move(values));
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "efficient-dominating",
        "perfect-dominating",
        "total-perfect-dominating",
        "independent-dominating",
        "weakly-perfect-dominating",
        "dominating-induced-matching",
        "[i,j]-dominating",
        "total-[i,j]-dominating",
    };
    return names;
}

bool is_sigma_rho_dominating(const Graph& g, const VertexSet& dset, const SigmaRhoSpec& spec) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : dset) {
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("witness vertex out of range");
        }
        in[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int count = 0;
        for (int u : g.neighbors(v)) count += in[u];
        if (in[v] ? !spec.sigma.contains(count) : !spec.rho.contains(count)) return false;
    }
    return true;
}

namespace {

// Shared subset scan for both oracles: subsets by size, lexicographic within
// a size, neighbor counts via bitmasks. Weighted runs keep the best weight
// seen; sizes beyond the best/budget cannot win because weights are >= 1.
DominationAnswer subset_scan(const Graph& g, const SigmaRhoSpec& spec,
                             const std::vector<std::int64_t>* weights,
                             std::optional<std::int64_t> budget, int cap) {
    int n = g.vertex_count();
    if (n > cap) {
        throw CapExceededError("graph has " + std::to_string(n) + " vertices, oracle cap is " +
                               std::to_string(cap));
    }
    if (n > 62) throw CapExceededError("oracle limited to 62 vertices");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) adj[v] |= std::uint64_t(1) << u;
    }

    auto valid = [&](std::uint64_t mask) {
        for (int v = 0; v < n; ++v) {
            int count = std::popcount(adj[v] & mask);
            bool ok = (mask >> v) & 1 ? spec.sigma.contains(count) : spec.rho.contains(count);
            if (!ok) return false;
        }
        return true;
    };
    auto weight_of = [&](const std::vector<int>& subset) {
        if (weights == nullptr) return static_cast<std::int64_t>(subset.size());
        std::int64_t w = 0;
        for (int v : subset) w += (*weights)[v];
        return w;
    };

    DominationAnswer best;
    std::vector<int> subset;
    for (int size = 0; size <= n; ++size) {
        // Weights are >= 1, so any subset of this size weighs at least `size`.
        if (budget.has_value() && size > *budget) break;
        if (best.exists && size > *best.cost) break;

        subset.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) subset[i] = i;
        for (;;) {
            std::uint64_t mask = 0;
            for (int v : subset) mask |= std::uint64_t(1) << v;
            if (valid(mask)) {
                std::int64_t w = weight_of(subset);
                if (budget.has_value()) {
                    if (w <= *budget) {
                        return {true, VertexSet(subset), w};
                    }
                } else if (weights == nullptr) {
                    return {true, VertexSet(subset), w};
                } else if (!best.exists || w < *best.cost) {
                    best = {true, VertexSet(subset), w};
                }
            }
            // next combination, lexicographic
            int i = size - 1;
            while (i >= 0 && subset[i] == n - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int t = i + 1; t < size; ++t) subset[t] = subset[t - 1] + 1;
        }
    }
    return best;
}

}  // namespace

DominationAnswer brute_force(const Graph& g, const SigmaRhoSpec& spec,
                             std::optional<std::int64_t> budget, int cap) {
    return subset_scan(g, spec, nullptr, budget, cap);
}

DominationAnswer brute_force_weighted(const WeightedGraph& g, const SigmaRhoSpec& spec,
                                      std::optional<std::int64_t> budget, int cap) {
    if (g.weights.size() != static_cast<std::size_t>(g.graph.vertex_count())) {
        throw std::invalid_argument("weight vector size mismatch");
    }
    for (std::int64_t w : g.weights) {
        if (w < 1) throw std::invalid_argument("weights must be >= 1");
    }
    return subset_scan(g.graph, spec, &g.weights, budget, cap);
}

}  // namespace sigmarho
