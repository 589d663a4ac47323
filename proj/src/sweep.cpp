#include "sigmarho/sweep.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "sigmarho/errors.hpp"
#include "sigmarho/graph.hpp"
#include "sigmarho/kernel_modulator.hpp"
#include "sigmarho/kernel_nd.hpp"
#include "sigmarho/modular.hpp"

namespace sigmarho {

namespace {

std::string cell(std::int64_t v) { return v < 0 ? "-" : std::to_string(v); }

std::string answer_cell(int v) {
    if (v == 1) return "YES";
    if (v == 0) return "NO";
    return "-";
}

}  // namespace

std::string RunReport::to_tsv() const {
    std::ostringstream out;
    out << "graph_id\tn\tm\tspec\td\tguard\tk\tblocks\tmw\tkernel_vars\t"
           "kernel_constraints\tkernel_bits\tanswer_kernel\tanswer_oracle\t"
           "agree\tlift_ok\twall_ms\n";
    for (const auto& r : rows) {
        out << r.graph_id << '\t' << r.n << '\t' << r.m << '\t' << r.spec_name << '\t' << r.d
            << '\t' << (r.guard_ok ? "ok" : "refused") << '\t' << cell(r.k) << '\t' << r.blocks
            << '\t' << r.mw << '\t' << cell(r.kernel_vars) << '\t' << cell(r.kernel_constraints)
            << '\t' << cell(r.kernel_bits) << '\t' << answer_cell(r.answer_kernel) << '\t'
            << answer_cell(r.answer_oracle) << '\t' << (r.agree ? 1 : 0) << '\t'
            << (r.lift_ok ? 1 : 0) << '\t' << cell(r.wall_ms) << '\n';
    }
    return out.str();
}

std::string RunReport::summary() const {
    std::ostringstream out;
    int kernel_rows = 0;
    for (const auto& r : rows) {
        if (r.guard_ok) ++kernel_rows;
    }
    out << "rows=" << rows.size() << " kernel_rows=" << kernel_rows << " refusals=" << refusals
        << " disagreements=" << disagreements
        << " lift_inconsistencies=" << lift_inconsistencies;
    return out.str();
}

RunReport run_sweep(const SweepConfig& config) {
    if (config.count < 0 || config.n_min < 1 || config.n_max < config.n_min ||
        config.ps.empty() || config.ds.empty() || config.spec_names.empty()) {
        throw std::invalid_argument("bad sweep config");
    }
    const char* corrupt_env = std::getenv("SIGMARHO_TEST_CORRUPT_KERNEL");
    bool corrupt_pending = corrupt_env != nullptr && corrupt_env[0] != '\0';

    std::vector<std::pair<std::string, SigmaRhoSpec>> specs;
    for (const auto& name : config.spec_names) specs.emplace_back(name, preset(name));

    RunReport report;
    int span = config.n_max - config.n_min + 1;
    for (int id = 0; id < config.count; ++id) {
        int n = config.n_min + id % span;
        double p = config.ps[static_cast<std::size_t>(id / span) % config.ps.size()];
        Graph g = generate_random(n, p, config.seed + static_cast<std::uint64_t>(id));
        int blocks = static_cast<int>(compute_type_partition(g).blocks.size());
        int mw = modular_width(decompose(g));

        for (const auto& [spec_name, spec] : specs) {
            for (int d : config.ds) {
                SweepRow row;
                row.graph_id = id;
                row.n = n;
                row.m = g.edge_count();
                row.spec_name = spec_name;
                row.d = d;
                row.blocks = blocks;
                row.mw = mw;

                bool guard_ok = false;
                try {
                    guard_ok = check_guard(spec, d);
                } catch (const UnsupportedSpecError&) {
                    guard_ok = false;  // non-finite spec: the kernel path refuses
                }
                row.guard_ok = guard_ok;
                if (!guard_ok) {
                    ++report.refusals;
                    report.rows.push_back(std::move(row));
                    continue;
                }

                auto start = std::chrono::steady_clock::now();
                VertexSet s = *compute_degree_d_modulator(g, d);
                row.k = s.size();
                KernelResult kr = kernelize(g, s, d, spec);
                row.kernel_vars = kr.csp.variable_count;
                row.kernel_constraints = static_cast<int>(kr.csp.constraints.size());
                row.kernel_bits = kr.metadata.bit_size_estimate;

                auto tau_prime = satisfiable_brute(kr.csp);
                row.answer_kernel = tau_prime.has_value() ? 1 : 0;
                if (tau_prime.has_value()) {
                    try {
                        lift_assignment(kr, *tau_prime);
                    } catch (const LiftError&) {
                        row.lift_ok = false;
                        ++report.lift_inconsistencies;
                    }
                }
                if (corrupt_pending) {
                    row.answer_kernel = 1 - row.answer_kernel;  // test hook
                    corrupt_pending = false;
                }

                row.answer_oracle = brute_force(g, spec).exists ? 1 : 0;
                row.agree = row.answer_kernel == row.answer_oracle;
                if (!row.agree) ++report.disagreements;

                if (config.timings) {
                    auto stop = std::chrono::steady_clock::now();
                    row.wall_ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                            .count();
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

}  // namespace sigmarho
