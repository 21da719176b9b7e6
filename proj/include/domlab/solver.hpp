#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/families.hpp"
#include "domlab/vertex_set.hpp"

namespace domlab {

/// Largest vertex count any solver accepts, whatever the configured guards.
inline constexpr int kMaxSolverOrder = 64;

/// Per-solver size guards. These are configuration: the defaults suit a
/// desktop machine, and DOMLAB_GUARD_N overrides all of them at once.
struct SolverLimits {
    int naive_max = 24;
    int enumerate_max = 16;
    int exact_max = 20;
    int domatic_max = 16;
    int t0_max = 14;

    /// Defaults, with every guard replaced by DOMLAB_GUARD_N when that
    /// variable holds a positive integer (clamped to kMaxSolverOrder).
    static SolverLimits from_environment();
    /// Every guard set to n (clamped to kMaxSolverOrder).
    static SolverLimits uniform(int n);
};

/// Thrown when an instance is larger than the guard of the requested solver.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& solver, int order, int guard);
    int order() const noexcept { return order_; }
    int guard() const noexcept { return guard_; }

private:
    int order_;
    int guard_;
};

enum class SolveStatus {
    solved,
    infeasible,  ///< delta(G) < k: no set (or partition) with the property exists
};

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    /// Set size for domination numbers, class count for domatic numbers.
    /// Zero when infeasible.
    int value = 0;
    VertexSet certificate;                ///< minimum set (domination numbers)
    std::vector<VertexSet> partition;     ///< maximum partition (domatic numbers)
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};

    bool feasible() const noexcept { return status == SolveStatus::solved; }
};

/// Minimum size of a k-tuple total (restrained) dominating set, by iterative
/// deepening over the target size with branch-and-bound on the most
/// constrained vertex. Among minimum sets the lexicographically smallest is
/// returned as certificate.
SolveResult gamma_exact(const DominationQuery& q, const SolverLimits& limits = {});

/// Plain scan of all subsets in increasing size, lexicographic within a
/// size. Shares only the predicates with gamma_exact.
SolveResult gamma_naive(const DominationQuery& q, const SolverLimits& limits = {});

/// Maximum number of classes of a partition of V(G) into k-tuple total
/// (restrained) dominating sets, trying class counts from the top down.
SolveResult domatic_exact(const DominationQuery& q, const SolverLimits& limits = {});

/// Minimum of t(S) over all k-tuple total restrained dominating sets S of a
/// complete multipartite graph, where t(S) counts parts not contained in S.
/// Only proper sets (S != V) count; t0 = 0 when V is the only such set.
struct MultipartiteAnalysis {
    PartitionSpec parts;
    int k = 1;
    bool feasible = false;  ///< false when delta < k
    int t0 = 0;
    int gamma = 0;
};

MultipartiteAnalysis t0_exact(const PartitionSpec& parts, int k, const SolverLimits& limits = {});

/// Every minimum-size set for the query, in lexicographic order.
std::vector<VertexSet> enumerate_optimal_sets(const DominationQuery& q, const SolverLimits& limits = {});

/// Every set (of any size) satisfying the query's predicate, ordered by bit
/// mask. Uses the enumeration guard.
std::vector<VertexSet> enumerate_dominating_sets(const DominationQuery& q, const SolverLimits& limits = {});

}  // namespace domlab
