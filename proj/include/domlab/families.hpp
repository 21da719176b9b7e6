#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Part sizes n_1..n_p of a complete multipartite graph.
struct PartitionSpec {
    std::vector<int> parts;

    int order() const;
    int part_count() const { return static_cast<int>(parts.size()); }
    /// Throws std::invalid_argument unless p >= 1 and every part is positive.
    void validate() const;
};

/// Vertex subsets R of V(G) and S of V(H) selecting which copies are kept
/// as-is and which are complemented in a complementary product.
struct ComplementaryProductSpec {
    VertexSet r;
    VertexSet s;
};

Graph empty_graph(int n);
Graph complete(int n);
/// Vertices 0..n-1 stand for 1..n; edges i(i+1) plus 1n. Requires n >= 3.
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
/// Parts occupy consecutive vertex blocks in the order given.
Graph complete_multipartite(const PartitionSpec& spec);

Graph complement(const Graph& g);

/// G(R) box H(S). Vertex (i, j) is numbered i * n(H) + j.
Graph complementary_product(const Graph& g, const Graph& h, const ComplementaryProductSpec& spec);

/// Cartesian product, i.e. the complementary product with R = V(G), S = V(H).
Graph cartesian_product(const Graph& g, const Graph& h);

/// G on vertices 0..n-1, its complement on n..2n-1, and the matching i -- n+i.
/// Vertex tags are "i" and "i" with an overbar, 1-based.
Graph complementary_prism(const Graph& g);

/// G with a pendant vertex n+i attached to each vertex i.
Graph corona_k1(const Graph& g);

/// Per-F-vertex choice of H-vertices (indices into H) to join to.
using JoinAssignment = std::vector<std::vector<Vertex>>;

/// Disjoint union of F (vertices 0..n(F)-1) and H (vertices n(F)..), with
/// every F-vertex joined to its assigned H-vertices. Without an assignment
/// every F-vertex is joined to H-vertices 0..k-1.
Graph k_join(const Graph& f, const Graph& h, int k, const std::optional<JoinAssignment>& assignment = std::nullopt);

/// G(n, p) sample. Each pair u < v, in lexicographic order, is kept when the
/// next 53-bit draw of a mt19937_64 seeded with `seed` is below p.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace domlab
