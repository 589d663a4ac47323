#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "sigmarho/errors.hpp"
#include "sigmarho/graph.hpp"
#include "sigmarho/kernel_modulator.hpp"
#include "sigmarho/kernel_nd.hpp"
#include "sigmarho/modular.hpp"
#include "sigmarho/sigma_rho.hpp"
#include "sigmarho/sweep.hpp"

using namespace sigmarho;

namespace {

// Exit codes: 0 yes / success, 1 no / disagreement, 2 parse or usage error,
// 3 oracle cap exceeded, 4 unsupported spec or guard refusal.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitUnsupported = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

// Spec selection shared by most subcommands: either a preset name or both
// explicit sets.
struct SpecArgs {
    std::string problem;
    std::string sigma;
    std::string rho;

    void attach(CLI::App* cmd) {
        cmd->add_option("--problem", problem, "preset problem name (see --list-problems)");
        cmd->add_option("--sigma", sigma, "sigma as '0,2,4', 'nat', or 'nat+'");
        cmd->add_option("--rho", rho, "rho in the same syntax");
    }
    SigmaRhoSpec resolve() const {
        if (!problem.empty()) {
            if (!sigma.empty() || !rho.empty()) {
                throw std::invalid_argument("--problem excludes --sigma/--rho");
            }
            return preset(problem);
        }
        if (sigma.empty() || rho.empty()) {
            throw std::invalid_argument("need --problem or both --sigma and --rho");
        }
        return {parse_number_set(sigma), parse_number_set(rho)};
    }
};

std::vector<int> parse_vertex_list(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 1 || v > n) {
            throw std::invalid_argument("bad vertex '" + item + "' (vertices are 1.." +
                                        std::to_string(n) + ")");
        }
        out.push_back(v - 1);
    }
    return out;
}

std::string witness_string(const VertexSet& w) {
    std::string s;
    for (int v : w) {
        if (!s.empty()) s += ',';
        s += std::to_string(v + 1);
    }
    return s.empty() ? "-" : s;
}

int print_answer(const DominationAnswer& a, const char* cost_label = "size") {
    if (!a.exists) {
        std::cout << "NO\n";
        return kExitNo;
    }
    std::cout << "YES";
    if (a.cost.has_value()) std::cout << ' ' << cost_label << '=' << *a.cost;
    if (a.witness.has_value()) std::cout << " witness=" << witness_string(*a.witness);
    std::cout << '\n';
    return kExitYes;
}

int cmd_solve(const std::string& graph_file, const SpecArgs& spec_args,
              const std::string& method, std::optional<std::int64_t> budget) {
    Graph g = parse_graph(read_file(graph_file));
    SigmaRhoSpec spec = spec_args.resolve();
    if (method == "brute") return print_answer(brute_force(g, spec, budget));
    if (method == "nd") {
        if (spec.rho.is_finite()) return print_answer(nd_enumerate_solve(g, spec, budget));
        return print_answer(nd_enumerate_solve_sigma(g, spec, budget));
    }
    if (method == "modular") {
        if (spec == preset("efficient-dominating")) {
            return print_answer(solve_eds_modular(g));
        }
        if (spec == preset("total-perfect-dominating")) {
            return print_answer(solve_ptds_modular(g));
        }
        throw UnsupportedSpecError(
            "--method modular handles efficient-dominating and total-perfect-dominating");
    }
    throw std::invalid_argument("unknown --method '" + method + "'");
}

std::string serialize_kernel_map(const KernelResult& kr) {
    std::ostringstream out;
    out << "map " << kr.graph.vertex_count() << ' ' << kr.modulator_order.size() << '\n';
    out << "g " << kr.g.to_string() << '\n';
    for (std::size_t i = 0; i < kr.modulator_order.size(); ++i) {
        out << "m " << i << ' ' << kr.modulator_order[i] + 1 << '\n';
    }
    for (const auto& entry : kr.elimination_table) {
        out << "e " << entry.vertex + 1 << ' ';
        if (entry.modulator_neighbors.empty()) {
            out << '-';
        } else {
            for (std::size_t i = 0; i < entry.modulator_neighbors.size(); ++i) {
                if (i > 0) out << ',';
                out << entry.modulator_neighbors[i] + 1;
            }
        }
        out << '\n';
    }
    return out.str();
}

int cmd_kernelize(const std::string& graph_file, const SpecArgs& spec_args, int d,
                  const std::string& modulator_text, bool approx, bool force_kernel,
                  const std::string& out_prefix) {
    Graph g = parse_graph(read_file(graph_file));
    SigmaRhoSpec spec = spec_args.resolve();
    if (!check_guard(spec, d)) {
        std::cerr << "guard refused: some i in sigma or rho has i-j in the other set "
                     "for 0 <= j <= "
                  << d << '\n';
        return kExitUnsupported;
    }

    VertexSet s;
    if (!modulator_text.empty()) {
        s = VertexSet(parse_vertex_list(modulator_text, g.vertex_count()));
        if (!verify_modulator(g, s, d)) {
            throw std::invalid_argument("--modulator is not a degree-" + std::to_string(d) +
                                        " modulator");
        }
    } else if (approx) {
        if (d != 0) throw std::invalid_argument("--approx supports --modulator-degree 0 only");
        s = approx_vertex_cover(g);
    } else {
        s = *compute_degree_d_modulator(g, d);
    }

    // Small-modulator case split: with 2^|S| <= n the instance is solved
    // outright by guessing over S instead of emitting a kernel.
    if (!force_kernel && s.size() < 62 &&
        (std::int64_t(1) << s.size()) <= g.vertex_count()) {
        std::cout << "small modulator (2^" << s.size() << " <= " << g.vertex_count()
                  << "): solved by guessing\n";
        return print_answer(solve_by_guessing(g, s, d, spec));
    }

    KernelResult kr = kernelize(g, s, d, spec);
    std::string csp_text = serialize_csp(kr.csp);
    std::string map_text = serialize_kernel_map(kr);
    std::cerr << "kernel: k=" << s.size() << " constraints=" << kr.csp.constraints.size()
              << " degree<=" << kr.csp.degree_bound
              << " bits=" << kr.metadata.bit_size_estimate << '\n';
    if (out_prefix.empty()) {
        std::cout << csp_text << map_text;
    } else {
        write_file(out_prefix + ".csp", csp_text);
        write_file(out_prefix + ".map", map_text);
    }
    return kExitYes;
}

std::string serialize_nd_kernel(const NdKernel& kr) {
    std::ostringstream out;
    out << "c budget " << kr.budget_out << '\n';
    for (std::size_t i = 0; i < kr.kept_vertices.size(); ++i) {
        out << "c kept " << i + 1 << ' ' << kr.kept_vertices[i] + 1 << '\n';
    }
    out << serialize_weighted_graph(kr.reduced);
    return out.str();
}

int cmd_kernelize_nd(const std::string& graph_file, const SpecArgs& spec_args,
                     const std::string& variant_name, std::int64_t k,
                     const std::string& out_file) {
    Graph g = parse_graph(read_file(graph_file));
    SigmaRhoSpec spec = spec_args.resolve();
    NdVariant variant;
    if (variant_name == "bounded") {
        variant = NdVariant::Bounded;
    } else if (variant_name == "rho-finite") {
        variant = NdVariant::RhoFinite;
    } else if (variant_name == "sigma-finite") {
        variant = NdVariant::SigmaFinite;
    } else {
        throw std::invalid_argument("unknown --variant '" + variant_name + "'");
    }
    auto out = kernelize_nd(g, spec, k, variant);
    if (std::holds_alternative<DominationAnswer>(out)) {
        std::cout << "fallback: weights would not fit in block-count bits; "
                     "solved by profile enumeration\n";
        return print_answer(std::get<DominationAnswer>(out));
    }
    std::string text = serialize_nd_kernel(std::get<NdKernel>(out));
    if (out_file.empty()) {
        std::cout << text;
    } else {
        write_file(out_file, text);
    }
    return kExitYes;
}

int cmd_solve_modular(const std::string& graph_file, const std::string& tree_file,
                      const SpecArgs& spec_args) {
    Graph g = parse_graph(read_file(graph_file));
    SigmaRhoSpec spec = spec_args.resolve();
    std::optional<DecompositionNode> tree;
    if (!tree_file.empty()) {
        tree = parse_decomposition(read_file(tree_file),
                                   [](const std::string& p) { return parse_graph(read_file(p)); });
    }
    if (spec == preset("efficient-dominating")) return print_answer(solve_eds_modular(g, tree));
    if (spec == preset("total-perfect-dominating")) {
        return print_answer(solve_ptds_modular(g, tree));
    }
    throw UnsupportedSpecError(
        "solve-modular handles efficient-dominating and total-perfect-dominating");
}

int cmd_generate(int n, double p, std::uint64_t seed, bool connected,
                 const std::string& out_file) {
    Graph g = connected ? generate_random_connected(n, p, seed) : generate_random(n, p, seed);
    std::string text = serialize_graph(g);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        write_file(out_file, text);
    }
    return kExitYes;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out_file) {
    RunReport report = run_sweep(cfg);
    std::string tsv = report.to_tsv();
    if (out_file.empty()) {
        std::cout << tsv;
    } else {
        write_file(out_file, tsv);
    }
    std::cout << report.summary() << '\n';
    return report.disagreements == 0 && report.lift_inconsistencies == 0 ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& graph_file, const SpecArgs& spec_args,
               const std::string& witness_text) {
    Graph g = parse_graph(read_file(graph_file));
    SigmaRhoSpec spec = spec_args.resolve();
    VertexSet w(parse_vertex_list(witness_text, g.vertex_count()));
    if (is_sigma_rho_dominating(g, w, spec)) {
        std::cout << "YES size=" << w.size() << " witness=" << witness_string(w) << '\n';
        return kExitYes;
    }
    std::cout << "NO\n";
    return kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"[sigma,rho]-domination kernels, FPT solvers, and oracles"};
    app.require_subcommand(1);

    auto* problems = app.add_subcommand("problems", "list preset problem names");

    auto* solve = app.add_subcommand("solve", "decide an instance directly");
    std::string solve_graph, solve_method = "brute";
    SpecArgs solve_spec;
    std::optional<std::int64_t> solve_budget;
    solve->add_option("--graph", solve_graph, "DIMACS-like graph file")->required();
    solve_spec.attach(solve);
    solve->add_option("--method", solve_method, "brute | nd | modular");
    solve->add_option("--budget", solve_budget, "maximum size (weight for weighted paths)");

    auto* kern = app.add_subcommand("kernelize", "modulator-parameterized kernel");
    std::string kern_graph, kern_modulator, kern_out;
    SpecArgs kern_spec;
    int kern_d = 0;
    bool kern_approx = false, kern_force = false;
    kern->add_option("--graph", kern_graph)->required();
    kern_spec.attach(kern);
    kern->add_option("--modulator-degree", kern_d, "d of the degree-d modulator (default 0)");
    kern->add_option("--modulator", kern_modulator,
                     "comma-separated 1-indexed modulator; computed exactly when absent");
    kern->add_flag("--approx", kern_approx, "greedy 2-approximate vertex cover (d=0 only)");
    kern->add_flag("--force-kernel", kern_force,
                   "emit the kernel even when 2^|S| <= n would solve directly");
    kern->add_option("--out", kern_out, "file prefix; writes <prefix>.csp and <prefix>.map");

    auto* knd = app.add_subcommand("kernelize-nd", "neighborhood-diversity kernels");
    std::string knd_graph, knd_variant = "bounded", knd_out;
    SpecArgs knd_spec;
    std::int64_t knd_k = 0;
    knd->add_option("--graph", knd_graph)->required();
    knd_spec.attach(knd);
    knd->add_option("--variant", knd_variant, "bounded | rho-finite | sigma-finite");
    knd->add_option("--k", knd_k, "solution budget")->required();
    knd->add_option("--out", knd_out, "output graph file (stdout when absent)");

    auto* smod = app.add_subcommand("solve-modular", "modular-width FPT solver");
    std::string smod_graph, smod_tree;
    SpecArgs smod_spec;
    smod->add_option("--graph", smod_graph)->required();
    smod->add_option("--tree", smod_tree, "decomposition file; computed when absent");
    smod_spec.attach(smod);

    auto* gen = app.add_subcommand("generate", "seeded random graph");
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    bool gen_connected = false;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability (default 0.5)");
    gen->add_option("--seed", gen_seed, "PRNG seed (default 1)");
    gen->add_flag("--connected", gen_connected, "retry seeds until connected");
    gen->add_option("--out", gen_out, "output file (stdout when absent)");

    auto* sweep = app.add_subcommand("sweep", "batch kernel-vs-oracle agreement runs");
    SweepConfig sweep_cfg;
    std::string sweep_out;
    sweep->add_option("--count", sweep_cfg.count, "number of graphs (default 200)");
    sweep->add_option("--n-min", sweep_cfg.n_min, "smallest n (default 4)");
    sweep->add_option("--n-max", sweep_cfg.n_max, "largest n (default 12)");
    sweep->add_option("--p", sweep_cfg.ps, "edge probabilities (default 0.2 0.5 0.8)");
    sweep->add_option("--seed", sweep_cfg.seed, "base seed (default 1)");
    sweep->add_option("--d", sweep_cfg.ds, "modulator degrees (default 0 1 2)");
    sweep->add_option("--spec", sweep_cfg.spec_names, "problem names (default: finite presets)");
    sweep->add_flag("--timings", sweep_cfg.timings, "record wall_ms (breaks byte determinism)");
    sweep->add_option("--out", sweep_out, "TSV report file (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "check a claimed witness");
    std::string verify_graph, verify_witness;
    SpecArgs verify_spec;
    verify->add_option("--graph", verify_graph)->required();
    verify_spec.attach(verify);
    verify->add_option("--witness", verify_witness, "comma-separated 1-indexed vertices; "
                                                    "empty set spelled as ''");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (problems->parsed()) {
            for (const auto& name : preset_names()) std::cout << name << '\n';
            return kExitYes;
        }
        if (solve->parsed()) return cmd_solve(solve_graph, solve_spec, solve_method, solve_budget);
        if (kern->parsed()) {
            return cmd_kernelize(kern_graph, kern_spec, kern_d, kern_modulator, kern_approx,
                                 kern_force, kern_out);
        }
        if (knd->parsed()) return cmd_kernelize_nd(knd_graph, knd_spec, knd_variant, knd_k, knd_out);
        if (smod->parsed()) return cmd_solve_modular(smod_graph, smod_tree, smod_spec);
        if (gen->parsed()) return cmd_generate(gen_n, gen_p, gen_seed, gen_connected, gen_out);
        if (sweep->parsed()) return cmd_sweep(sweep_cfg, sweep_out);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_spec, verify_witness);
    } catch (const ParseError& e) {
        std::cerr << "parse error (line " << e.line() << "): " << e.what() << '\n';
        return kExitParse;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what()
                  << " (raise with SIGMARHO_ORACLE_CAP=<n>)\n";
        return kExitCap;
    } catch (const UnsupportedSpecError& e) {
        std::cerr << "unsupported spec: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitParse;
}
