#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "domlab/vertex_set.hpp"

namespace domlab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept both as sorted neighbor lists and as bitset rows, so
/// membership tests and neighborhood intersections are cheap. Degrees are
/// computed once at construction; the graph cannot change afterwards.
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return static_cast<int>(neighbors_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(static_cast<std::size_t>(v)); }
    const VertexSet& neighborhood(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
    bool adjacent(Vertex u, Vertex v) const { return rows_.at(static_cast<std::size_t>(u)).contains(v); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const noexcept { return min_degree_; }
    int max_degree() const noexcept { return max_degree_; }
    bool is_regular() const noexcept { return order() == 0 || min_degree_ == max_degree_; }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Per-vertex display tags. Empty strings when the graph carries none.
    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Copy of this graph with the given per-vertex tags.
    Graph with_labels(std::vector<std::string> labels) const;

    /// Subgraph induced by `vertices`, renumbered in increasing order.
    Graph induced(const std::vector<Vertex>& vertices) const;

    /// Structural equality: same order and same edge set. Labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

    friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
    int min_degree_ = 0;
    int max_degree_ = 0;
};

/// Builds a graph on n vertices from an edge list. Duplicate edges collapse.
/// Throws std::invalid_argument on a self-loop or an out-of-range endpoint,
/// naming the offending pair.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// True when the vertices admit a proper 2-colouring.
bool is_bipartite(const Graph& g);

}  // namespace domlab
