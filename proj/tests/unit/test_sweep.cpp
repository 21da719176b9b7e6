#include <gtest/gtest.h>

#include <sstream>

#include "domlab/family_spec.hpp"
#include "domlab/sweep.hpp"

using namespace domlab;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.sections = {"complete", "cycle", "witness", "oracle"};
    cfg.complete_n_max = 6;
    cfg.domatic_complete_n_max = 5;
    cfg.cycle_n_max = 8;
    cfg.witness_cycle_n_max = 8;
    cfg.witness_complement_n_max = 8;
    cfg.witness_prism_path_n_max = 6;
    cfg.witness_prism_cycle_n_max = 6;
    cfg.exhaustive_n_max = 4;
    cfg.oracle_random_graphs = 10;
    return cfg;
}

}  // namespace

TEST(Sweep, CsvHeaderAndSortedRows) {
    const Report r = run_sweep(small_config());
    const std::string csv = r.csv(false);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "instance,family,n,k,variant,solver,formula,applicable,match,witness,runtime_ms");
    for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(r.rows[i - 1].instance, r.rows[i].instance);
    EXPECT_EQ(r.summary().discrepancies, 0);
    EXPECT_EQ(r.exit_status(), 0);
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
    SweepConfig a = small_config();
    SweepConfig b = small_config();
    b.workers = 3;
    EXPECT_EQ(run_sweep(a).csv(false), run_sweep(b).csv(false));
}

TEST(Sweep, RowCountMatchesConfig) {
    SweepConfig cfg;
    cfg.sections = {"complete"};
    cfg.complete_n_max = 5;
    cfg.domatic_complete_n_max = 4;
    // sum_{n=2..5} (n-1) gamma rows + sum_{n=2..4} (n-1) domatic rows
    EXPECT_EQ(run_sweep(cfg).rows.size(), 10u + 6u);
}

TEST(Sweep, GuardSkipsAreCounted) {
    SweepConfig cfg;
    cfg.sections = {"complete"};
    cfg.complete_n_max = 6;
    cfg.domatic_complete_n_max = 2;
    cfg.limits = SolverLimits::uniform(5);
    const Report r = run_sweep(cfg);
    EXPECT_EQ(r.summary().skipped, 5);
    for (const auto& row : r.rows) {
        if (row.skipped) EXPECT_EQ(row.solver, "skipped (guard)");
    }
}

TEST(Sweep, DiscrepancyDrivesExitStatus) {
    Report r;
    ReportRow ok;
    ok.match = "yes";
    ReportRow bad;
    bad.match = "no";
    r.rows = {ok, bad};
    EXPECT_EQ(r.exit_status(), 3);
    r.rows[1].allowlisted = true;
    EXPECT_EQ(r.exit_status(), 0);
    EXPECT_EQ(r.summary().allowlisted, 1);
}

TEST(Sweep, CsvQuotingAndMarkdown) {
    Report r;
    ReportRow row;
    row.instance = "a";
    row.family = "kpartite:2,2,2";
    row.witness = "say \"hi\"";
    row.match = "yes";
    r.rows = {row};
    const std::string csv = r.csv(false);
    EXPECT_NE(csv.find("\"kpartite:2,2,2\""), std::string::npos);
    EXPECT_NE(csv.find("\"say \"\"hi\"\"\""), std::string::npos);
    std::ostringstream md;
    r.write_markdown(md, false);
    EXPECT_NE(md.str().find("| total | matched | discrepancies |"), std::string::npos);
}

TEST(Sweep, RejectsBadConfig) {
    SweepConfig cfg;
    cfg.sections = {"nope"};
    EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
    SweepConfig empty;
    empty.cycle_n_min = 9;
    empty.cycle_n_max = 4;
    EXPECT_THROW(empty.validate(), std::invalid_argument);
    SweepConfig guard;
    guard.limits.exact_max = 0;
    EXPECT_THROW(guard.validate(), std::invalid_argument);
}

TEST(Sweep, RandomInstancesRespectMinDegree) {
    const auto a = random_instances(1, 30, 6, 10, {1, 2});
    const auto b = random_instances(1, 30, 6, 10, {1, 2});
    ASSERT_EQ(a.size(), 30u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].family, b[i].family);
        const Graph g = parse_family(a[i].family);
        EXPECT_GE(g.min_degree(), a[i].k);
        EXPECT_GE(g.order(), 6);
        EXPECT_LE(g.order(), 10);
    }
}
