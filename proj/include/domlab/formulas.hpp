#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domlab/families.hpp"

namespace domlab {

enum class VerdictKind { exact, lower_bound, upper_bound, interval };

/// A closed-form value or bound, or the reason it does not apply.
///
/// Exact verdicts carry lower == upper. Inapplicable verdicts carry no value;
/// `reason` always names the case (or the failed precondition).
struct FormulaVerdict {
    VerdictKind kind = VerdictKind::exact;
    std::optional<int> lower;
    std::optional<int> upper;
    bool applicable = false;
    std::string reason;

    static FormulaVerdict exact(int value, std::string reason);
    static FormulaVerdict at_least(int value, std::string reason);
    static FormulaVerdict at_most(int value, std::string reason);
    static FormulaVerdict between(int lo, int hi, std::string reason);
    static FormulaVerdict inapplicable(std::string reason);

    /// Exact value; throws std::logic_error unless this is an applicable exact verdict.
    int value() const;
    /// True when `observed` agrees with the verdict. Inapplicable verdicts admit everything.
    bool admits(int observed) const;
    /// "5", ">=3", "<=4", "[2,5]" or "n/a".
    std::string to_string() const;
};

/// k-tuple total restrained domination number of K_n.
FormulaVerdict f_complete(int n, int k);
/// ... of the complement of C_n; needs n >= k+3 >= 4.
FormulaVerdict f_complement_cycle(int n, int k);
/// ... of the complement of P_n; needs n >= k+3 >= 4.
FormulaVerdict f_complement_path(int n, int k);
/// ... of C_n for k in {1, 2}; needs n >= 4.
FormulaVerdict f_cycle(int n, int k);
/// ... of K_{n,m}. The two part sizes may be given in either order.
FormulaVerdict f_complete_bipartite(int n, int m, int k);
/// 2k <= gamma <= n for a bipartite graph of order n with delta >= k.
FormulaVerdict f_bipartite_bounds(int n, int k);

/// Interval [ceil(kp/(p-1)), n-k] for a complete p-partite graph, p >= 3,
/// valid when gamma < n. With t0 >= 2 the upper end tightens to
/// n - k - ceil(k/(t0-1)). When `gamma` is supplied and equals n the verdict
/// is inapplicable.
FormulaVerdict f_multipartite_bounds(const PartitionSpec& parts, int k, std::optional<int> t0 = std::nullopt,
                                     std::optional<int> gamma = std::nullopt);

/// gamma >= 3n/2 - m/k for a graph with n vertices, m edges and delta >= k.
FormulaVerdict f_lower_edges(int n, int m, int k);

/// Domatic number floor(n/(k+1)) of K_n, 1 <= k < n.
FormulaVerdict f_domatic_complete(int n, int k);
/// d <= floor(n/(k+1)); for bipartite graphs d <= floor(n/(2k)).
FormulaVerdict f_domatic_caps(int n, int k, bool bipartite);

/// Complementary prism of C_n: k = 1 residue formula, k = 2 (2n for
/// n = 4, 5 and n+2 from n = 6).
FormulaVerdict f_prism_cycle(int n, int k);
/// Complementary prism of P_n, k = 1.
FormulaVerdict f_prism_path(int n);

/// Complementary prism of an l-regular graph of order n, for
/// 1 <= k-1 <= l <= 2k-2: exactly 2n when n <= l+2k-1, else at least n+k.
FormulaVerdict f_prism_regular_lb(int n, int ell, int k);

/// gamma_{k-1}(G) + gamma_{k-1}(co-G) <= gamma_k(G co-G) <= gamma_k(G) + gamma_k(co-G),
/// lower half for k >= 2 only. Pass the component values computed for G and
/// its complement; a missing lower component drops the lower half.
FormulaVerdict f_prism_sandwich(int k, std::optional<int> lower_g, std::optional<int> lower_gbar, int upper_g,
                                int upper_gbar);

/// gamma = m for G = F k-joined to a spanning subgraph of K_m with m minimal;
/// m = k+1 for K_{k+1}.
FormulaVerdict f_kjoin_gamma(int m, int k);

/// Known k-tuple total (non-restrained) domination numbers of prisms.
enum class PrismOracle {
    total_cycle,         ///< gamma_t of the prism of C_n, n >= 4
    double_total_cycle,  ///< 2-tuple total of the prism of C_n, n >= 5
    total_path,          ///< gamma_t of the prism of P_n, n >= 4
};
FormulaVerdict f_prelemma_prisms(int n, PrismOracle which);

}  // namespace domlab
