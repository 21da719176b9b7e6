#include "domlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace domlab {

namespace {

std::string pair_text(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) {
        throw std::invalid_argument("build_graph: negative vertex count " + std::to_string(n));
    }
    Graph g;
    g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& e : edges) {
        auto [u, v] = e;
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("build_graph: endpoint out of range in edge " + pair_text(e));
        }
        if (u == v) {
            throw std::invalid_argument("build_graph: self-loop " + pair_text(e));
        }
        g.rows_[static_cast<std::size_t>(u)].insert(v);
        g.rows_[static_cast<std::size_t>(v)].insert(u);
    }
    g.neighbors_.resize(static_cast<std::size_t>(n));
    g.labels_.assign(static_cast<std::size_t>(n), std::string{});
    std::size_t degree_sum = 0;
    g.min_degree_ = n == 0 ? 0 : n;
    g.max_degree_ = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto& row = g.neighbors_[static_cast<std::size_t>(v)];
        row = g.rows_[static_cast<std::size_t>(v)].members();
        int d = static_cast<int>(row.size());
        degree_sum += row.size();
        g.min_degree_ = std::min(g.min_degree_, d);
        g.max_degree_ = std::max(g.max_degree_, d);
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != neighbors_.size()) {
        throw std::invalid_argument("Graph::with_labels: expected " + std::to_string(order()) +
                                    " labels, got " + std::to_string(labels.size()));
    }
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> index(neighbors_.size(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        Vertex v = sorted[i];
        if (v < 0 || v >= order()) {
            throw std::out_of_range("Graph::induced: vertex " + std::to_string(v) + " out of range");
        }
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (const auto& [u, v] : edges()) {
        int a = index[static_cast<std::size_t>(u)];
        int b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    Graph sub = build_graph(static_cast<int>(sorted.size()), kept);
    std::vector<std::string> sub_labels;
    for (Vertex v : sorted) sub_labels.push_back(label(v));
    return sub.with_labels(std::move(sub_labels));
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (colour[static_cast<std::size_t>(root)] >= 0) continue;
        colour[static_cast<std::size_t>(root)] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                auto& cu = colour[static_cast<std::size_t>(u)];
                if (cu < 0) {
                    cu = 1 - colour[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (cu == colour[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace domlab
