#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "domlab/solver.hpp"

namespace domlab {

/// Which checks a verification sweep runs, over which parameter ranges.
struct SweepConfig {
    /// Section names to run; empty means all of kSweepSections.
    std::vector<std::string> sections;

    int complete_n_max = 12;
    int domatic_complete_n_max = 10;
    int cycle_n_min = 4;
    int cycle_n_max = 12;
    int complement_n_min = 4;
    int complement_n_max = 14;
    int k_max = 3;
    int bipartite_part_max = 7;
    int multipartite_order_max = 12;
    std::vector<int> multipartite_part_counts{3, 4};
    int prism_n_min = 4;
    int prism_n_max = 8;
    int witness_cycle_n_max = 16;
    int witness_complement_n_max = 16;
    int witness_prism_path_n_max = 12;
    int witness_prism_cycle_n_max = 12;
    int exhaustive_n_max = 7;
    int oracle_random_graphs = 500;
    int oracle_n_min = 8;
    int oracle_n_max = 12;
    int property_random_graphs = 200;
    int property_n_min = 5;
    int property_n_max = 10;
    int sandwich_n_max = 7;

    std::uint64_t seed = 1;
    SolverLimits limits = SolverLimits::from_environment();
    int workers = 1;
    /// Fill the runtime_ms column. Off by default so reports are byte-stable.
    bool timings = false;

    /// Throws std::invalid_argument on an unknown section, an empty range or
    /// a non-positive guard.
    void validate() const;
};

/// All section names, in run order.
extern const std::vector<std::string> kSweepSections;

struct ReportRow {
    std::string instance;  ///< unique, sortable id
    std::string family;    ///< family spec of the graph (reproducible with --family)
    int n = 0;
    int k = 0;
    std::string variant;   ///< "total", "restrained" or "-"
    std::string solver;    ///< computed value, "infeasible" or "skipped (guard)"
    std::string formula;   ///< verdict text
    bool applicable = false;
    std::string match;     ///< "yes", "no" or "-"
    std::string witness;   ///< witness outcome or "-"
    double runtime_ms = 0.0;
    bool skipped = false;
    bool allowlisted = false;  ///< discrepancy on a known open question; non-fatal

    bool discrepancy() const { return match == "no"; }
};

struct ReportSummary {
    int total = 0;
    int matched = 0;
    int discrepancies = 0;  ///< excluding allowlisted rows
    int allowlisted = 0;
    int skipped = 0;
};

struct Report {
    std::vector<ReportRow> rows;  ///< sorted by instance id

    ReportSummary summary() const;
    /// 0 when every discrepancy is allowlisted, 3 otherwise.
    int exit_status() const;

    void write_csv(std::ostream& out, bool timings) const;
    void write_markdown(std::ostream& out, bool timings) const;
    std::string csv(bool timings) const;
};

/// Runs every selected section. Instances run on `workers` threads; rows are
/// sorted by instance id, so the output does not depend on the schedule.
Report run_sweep(const SweepConfig& config);

/// The `random:N:P:SEED` graphs used by the randomized suites: the i-th graph
/// of a stream seeded with `seed`, with order in [n_min, n_max], edge
/// probability from {0.3, 0.5, 0.7}, resampled until delta >= k.
struct RandomInstance {
    std::string family;
    int k = 1;
};
std::vector<RandomInstance> random_instances(std::uint64_t seed, int count, int n_min, int n_max,
                                             const std::vector<int>& k_values);

}  // namespace domlab
