#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"
#include "domlab/vertex_set.hpp"

namespace domlab {

/// An explicit set (or a pair of sets, for domatic-pair witnesses) taken from
/// a closed-form construction for a named graph family.
struct Witness {
    VertexSet set;
    std::optional<VertexSet> partner;
    std::string source;
    int claimed_size = 0;  ///< |set| at construction

    Witness(VertexSet s, std::string src);
    Witness(VertexSet s, VertexSet second, std::string src);

    bool is_pair() const { return partner.has_value(); }
    /// "source: {1,2,5}" or "source: {..} | {..}", 1-based vertex numbers.
    /// In a complementary prism on 2n vertices, the overbarred copy of i is n+i.
    std::string to_string() const;
};

/// Total restrained dominating set of C_n built by residue of n mod 4.
/// Vertices refer to cycle(n). Requires n >= 4.
Witness witness_cycle_trds(int n);

/// k-tuple total restrained dominating set of the complement of C_n.
/// Vertices refer to complement(cycle(n)). Requires n >= k+3 >= 4.
Witness witness_complement_cycle(int n, int k);

/// k-tuple total restrained dominating set of the complement of P_n.
/// Requires n >= k+3 >= 4; for k = 1 the set is {1, n} when n >= 6 and
/// {1, 4} when n = 5.
Witness witness_complement_path(int n, int k);

/// Two disjoint total dominating sets of the complementary prism of C_n,
/// exactly as the construction lists them (no repair). Requires n >= 4.
Witness witness_prism_cycle_domatic_pair(int n);

/// Total restrained dominating set of the complementary prism of P_n.
/// Requires n >= 4.
Witness witness_prism_path_trds(int n);

/// Outcome of checking a witness; failures are data, never exceptions.
struct WitnessCheck {
    bool valid = false;
    std::optional<bool> size_match;  ///< unset when no expected size was given
    std::optional<Violation> violation;
    std::optional<Violation> partner_violation;
    bool disjoint = true;
    /// For pairs: {S, V - S} after giving leftover vertices to the partner
    /// class is a total domatic partition.
    std::optional<bool> partition_valid;

    bool ok() const { return valid && size_match.value_or(true); }
    std::string describe() const;
};

/// Single sets are checked with the k-tuple total restrained predicate; pairs
/// are checked class-by-class with the k-tuple total predicate. When
/// `expected_size` is given, every listed set must have exactly that size.
WitnessCheck validate_witness(const Graph& g, const Witness& w, int k, std::optional<int> expected_size);

/// {S, V - S} where the partner class absorbs the vertices neither set lists.
std::vector<VertexSet> completed_partition(const Witness& pair);

}  // namespace domlab
