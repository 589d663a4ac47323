#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigmarho/sigma_rho.hpp"

namespace sigmarho {

struct SweepConfig {
    int count = 200;
    int n_min = 4;
    int n_max = 12;
    std::vector<double> ps = {0.2, 0.5, 0.8};
    std::uint64_t seed = 1;
    std::vector<int> ds = {0, 1, 2};
    std::vector<std::string> spec_names = {
        "efficient-dominating",
        "total-perfect-dominating",
        "weakly-perfect-dominating",
        "total-[1,2]-dominating",
    };
    bool timings = false;  // off keeps reports byte-identical across runs
};

struct SweepRow {
    int graph_id = 0;
    int n = 0;
    int m = 0;
    std::string spec_name;
    int d = 0;
    bool guard_ok = false;
    int k = -1;                // modulator size (guard-passing rows)
    int blocks = 0;            // neighborhood diversity
    int mw = 0;                // modular width of decompose(g)
    int kernel_vars = -1;
    int kernel_constraints = -1;
    std::int64_t kernel_bits = -1;
    int answer_kernel = -1;    // 1 yes, 0 no, -1 not run (guard refused)
    int answer_oracle = -1;
    bool agree = true;
    bool lift_ok = true;
    std::int64_t wall_ms = -1; // -1 prints as "-"
};

struct RunReport {
    std::vector<SweepRow> rows;
    int refusals = 0;
    int disagreements = 0;
    int lift_inconsistencies = 0;

    std::string to_tsv() const;  // header line + one row per record
    std::string summary() const;
};

// For each generated graph and each (spec, d): if the guard fails, record a
// refusal row; otherwise compute an exact degree-d modulator, kernelize,
// decide the kernel CSP by brute force, lift a found assignment, and compare
// with the direct oracle. Deterministic for fixed config (modulo wall_ms,
// which is suppressed unless config.timings).
RunReport run_sweep(const SweepConfig& config);

}  // namespace sigmarho
