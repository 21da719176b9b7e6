#pragma once

#include <cstdint>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Largest order for which canonical_key is defined (n(n-1)/2 <= 64 bits).
inline constexpr int kMaxCanonicalOrder = 11;

/// Canonical adjacency code: the minimum upper-triangle bit string over all
/// vertex orderings that respect a degree-based vertex invariant. Two graphs
/// of the same order are isomorphic iff their keys are equal.
std::uint64_t canonical_key(const Graph& g);

/// Backtracking isomorphism test with degree pruning. Meant for small graphs.
bool is_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of graphs on n vertices,
/// ordered by canonical key. Requires n <= 8.
std::vector<Graph> all_graphs(int n);

}  // namespace domlab
