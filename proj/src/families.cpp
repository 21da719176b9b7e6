#include "domlab/families.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace domlab {

namespace {

const char* const kOverbar = "\xCC\x84";  // U+0304 combining macron

std::vector<std::string> one_based_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative order " + std::to_string(n));
}

}  // namespace

int PartitionSpec::order() const { return std::accumulate(parts.begin(), parts.end(), 0); }

void PartitionSpec::validate() const {
    if (parts.empty()) throw std::invalid_argument("PartitionSpec: at least one part required");
    for (int size : parts) {
        if (size < 1) throw std::invalid_argument("PartitionSpec: part size " + std::to_string(size) + " < 1");
    }
}

Graph empty_graph(int n) {
    require_nonnegative(n, "empty_graph");
    return build_graph(n, {}).with_labels(one_based_labels(n));
}

Graph complete(int n) {
    require_nonnegative(n, "complete");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return build_graph(n, edges).with_labels(one_based_labels(n));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order " + std::to_string(n) + " < 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return build_graph(n, edges).with_labels(one_based_labels(n));
}

Graph path(int n) {
    require_nonnegative(n, "path");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(n, edges).with_labels(one_based_labels(n));
}

Graph complete_bipartite(int a, int b) {
    return complete_multipartite(PartitionSpec{{a, b}});
}

Graph complete_multipartite(const PartitionSpec& spec) {
    spec.validate();
    std::vector<int> part_of;
    for (int p = 0; p < spec.part_count(); ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(spec.parts[static_cast<std::size_t>(p)]), p);
    int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges).with_labels(one_based_labels(n));
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return build_graph(g.order(), edges).with_labels(g.labels());
}

Graph complementary_product(const Graph& g, const Graph& h, const ComplementaryProductSpec& spec) {
    const int ng = g.order();
    const int nh = h.order();
    if (spec.r.host_size() != ng) throw std::invalid_argument("complementary_product: R is not a subset of V(G)");
    if (spec.s.host_size() != nh) throw std::invalid_argument("complementary_product: S is not a subset of V(H)");

    auto id = [nh](Vertex i, Vertex j) { return i * nh + j; };
    std::vector<Edge> edges;
    // Row copies: H where u_i in R, complement of H otherwise.
    for (Vertex i = 0; i < ng; ++i) {
        const bool keep = spec.r.contains(i);
        for (Vertex j = 0; j < nh; ++j) {
            for (Vertex l = j + 1; l < nh; ++l) {
                if (h.adjacent(j, l) == keep) edges.emplace_back(id(i, j), id(i, l));
            }
        }
    }
    // Column copies: G where v_j in S, complement of G otherwise.
    for (Vertex j = 0; j < nh; ++j) {
        const bool keep = spec.s.contains(j);
        for (Vertex i = 0; i < ng; ++i) {
            for (Vertex t = i + 1; t < ng; ++t) {
                if (g.adjacent(i, t) == keep) edges.emplace_back(id(i, j), id(t, j));
            }
        }
    }
    std::vector<std::string> labels;
    for (Vertex i = 0; i < ng; ++i) {
        for (Vertex j = 0; j < nh; ++j) labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
    return build_graph(ng * nh, edges).with_labels(std::move(labels));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    return complementary_product(g, h, {VertexSet::all(g.order()), VertexSet::all(h.order())});
}

Graph complementary_prism(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : complement(g).edges()) edges.emplace_back(n + u, n + v);
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    auto labels = one_based_labels(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i) + kOverbar);
    return build_graph(2 * n, edges).with_labels(std::move(labels));
}

Graph corona_k1(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return build_graph(2 * n, edges).with_labels(one_based_labels(2 * n));
}

Graph k_join(const Graph& f, const Graph& h, int k, const std::optional<JoinAssignment>& assignment) {
    const int nf = f.order();
    const int nh = h.order();
    if (k < 1) throw std::invalid_argument("k_join: k must be positive");
    if (nh < k) {
        throw std::invalid_argument("k_join: H has " + std::to_string(nh) + " vertices, fewer than k = " + std::to_string(k));
    }
    JoinAssignment chosen;
    if (assignment) {
        if (static_cast<int>(assignment->size()) != nf) {
            throw std::invalid_argument("k_join: assignment must list one subset per F-vertex");
        }
        chosen = *assignment;
    } else {
        std::vector<Vertex> first(static_cast<std::size_t>(k));
        std::iota(first.begin(), first.end(), 0);
        chosen.assign(static_cast<std::size_t>(nf), first);
    }

    std::vector<Edge> edges = f.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(nf + u, nf + v);
    for (Vertex x = 0; x < nf; ++x) {
        VertexSet targets(nh);
        for (Vertex y : chosen[static_cast<std::size_t>(x)]) {
            if (y < 0 || y >= nh) {
                throw std::invalid_argument("k_join: H-vertex " + std::to_string(y) + " out of range");
            }
            targets.insert(y);
        }
        if (targets.size() < k) {
            throw std::invalid_argument("k_join: F-vertex " + std::to_string(x) + " is joined to " +
                                        std::to_string(targets.size()) + " H-vertices, fewer than k = " +
                                        std::to_string(k));
        }
        for (Vertex y : targets.members()) edges.emplace_back(x, nf + y);
    }
    return build_graph(nf + nh, edges).with_labels(one_based_labels(nf + nh));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require_nonnegative(n, "random_graph");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges).with_labels(one_based_labels(n));
}

}  // namespace domlab
