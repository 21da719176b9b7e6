#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/vertex_set.hpp"

namespace domlab {

/// Which domination notion a query asks about.
enum class Variant {
    total,       ///< k-tuple total domination
    restrained,  ///< k-tuple total restrained domination
};

std::string_view to_string(Variant v);
/// Accepts "total" and "restrained"; throws std::invalid_argument otherwise.
Variant parse_variant(std::string_view text);

/// A problem instance (graph, k, variant).
struct DominationQuery {
    Graph graph;
    int k = 1;
    Variant variant = Variant::restrained;

    /// Throws std::invalid_argument when k < 1.
    void validate() const;
};

/// A single failed vertex condition.
struct Violation {
    Vertex vertex = 0;
    /// "in-set" when fewer than k neighbors lie in S, "outside" when a vertex
    /// of V - S has fewer than k neighbors in V - S.
    std::string condition;
    int neighbors = 0;  ///< the count that fell short of k

    std::string describe() const;
};

/// Every vertex of G has at least k neighbors in S.
bool is_ktds(const Graph& g, const VertexSet& s, int k);

/// is_ktds, and every vertex outside S has at least k neighbors outside S.
bool is_ktrds(const Graph& g, const VertexSet& s, int k);

bool satisfies(const Graph& g, const VertexSet& s, int k, Variant variant);

/// The lowest-numbered failing vertex condition, if any.
std::optional<Violation> first_violation(const Graph& g, const VertexSet& s, int k, Variant variant);

/// Pairwise disjoint classes covering V(G), each satisfying the variant.
bool is_domatic_partition(const Graph& g, const std::vector<VertexSet>& classes, int k, Variant variant);

/// Partition into k-tuple total restrained dominating sets.
bool is_ktrdp(const Graph& g, const std::vector<VertexSet>& classes, int k);

}  // namespace domlab
