#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>

#include "sigmarho/sweep.hpp"

using namespace sigmarho;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.count = 10;
    cfg.n_min = 4;
    cfg.n_max = 8;
    cfg.seed = 5;
    return cfg;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n' ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("run_sweep") {
    RunReport report = run_sweep(small_config());

    SUBCASE("row accounting") {
        // 10 graphs x 4 specs x 3 d-values.
        CHECK(report.rows.size() == 120);
        // Of the default spec list, only (efficient-dominating, d=0) passes
        // the guard; everything else records a refusal.
        CHECK(report.refusals == 110);
        CHECK(report.disagreements == 0);
        CHECK(report.lift_inconsistencies == 0);
        for (const auto& row : report.rows) {
            CHECK(row.agree);
            CHECK(row.lift_ok);
            if (row.guard_ok) {
                CHECK(row.spec_name == "efficient-dominating");
                CHECK(row.d == 0);
                CHECK(row.k >= 0);
                CHECK(row.kernel_vars == row.k);
                CHECK(row.answer_kernel == row.answer_oracle);
                std::int64_t kk = row.k;
                CHECK(row.kernel_constraints <= kk * kk + 1);
            } else {
                CHECK(row.k == -1);
                CHECK(row.answer_kernel == -1);
            }
            CHECK(row.blocks >= 1);
            CHECK(row.mw >= 1);
            CHECK(row.wall_ms == -1);  // timings off by default
        }
    }
    SUBCASE("deterministic reports") {
        RunReport again = run_sweep(small_config());
        CHECK(report.to_tsv() == again.to_tsv());
        CHECK(report.summary() == again.summary());
    }
    SUBCASE("tsv shape") {
        std::string tsv = report.to_tsv();
        CHECK(count_lines(tsv) == 121);  // header + rows
        std::istringstream in(tsv);
        std::string header;
        std::getline(in, header);
        CHECK(header ==
              "graph_id\tn\tm\tspec\td\tguard\tk\tblocks\tmw\tkernel_vars\t"
              "kernel_constraints\tkernel_bits\tanswer_kernel\tanswer_oracle\t"
              "agree\tlift_ok\twall_ms");
        std::string row;
        std::getline(in, row);
        bool has_guard_cell =
            row.find("\tok\t") != std::string::npos || row.find("refused") != std::string::npos;
        CHECK(has_guard_cell);
    }
    SUBCASE("summary counts") {
        CHECK(report.summary() ==
              "rows=120 kernel_rows=10 refusals=110 disagreements=0 lift_inconsistencies=0");
    }
}

TEST_CASE("sweep timings column") {
    SweepConfig cfg = small_config();
    cfg.count = 2;
    cfg.timings = true;
    RunReport report = run_sweep(cfg);
    for (const auto& row : report.rows) {
        if (row.guard_ok) CHECK(row.wall_ms >= 0);
    }
}

TEST_CASE("corrupt-kernel hook trips the harness") {
    setenv("SIGMARHO_TEST_CORRUPT_KERNEL", "1", 1);
    SweepConfig cfg = small_config();
    cfg.count = 4;
    RunReport report = run_sweep(cfg);
    unsetenv("SIGMARHO_TEST_CORRUPT_KERNEL");
    CHECK(report.disagreements == 1);
}

TEST_CASE("sweep config validation") {
    SweepConfig bad = small_config();
    bad.n_max = 2;
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    bad = small_config();
    bad.ps.clear();
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
}
