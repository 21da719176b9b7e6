#include "domlab/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace domlab {

namespace {

// Vertex invariant: degree, then the sorted degrees of the neighbors.
std::vector<int> invariant_classes(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto& sig = signature[static_cast<std::size_t>(v)];
        sig.push_back(g.degree(v));
        std::vector<int> nd;
        for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        sig.insert(sig.end(), nd.begin(), nd.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        cls[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    return cls;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        cls_ = invariant_classes(g);
        // Position p must be filled from class slot_class_[p].
        std::vector<int> sorted = cls_;
        std::sort(sorted.begin(), sorted.end());
        slot_class_ = sorted;
        total_bits_ = n_ * (n_ - 1) / 2;
        used_.assign(static_cast<std::size_t>(n_), false);
        order_.assign(static_cast<std::size_t>(n_), -1);
    }

    std::uint64_t run() {
        if (n_ <= 1) return 0;
        extend(0, 0);
        return best_;
    }

private:
    void extend(int pos, std::uint64_t prefix) {
        if (pos == n_) {
            if (!found_ || prefix < best_) {
                best_ = prefix;
                found_ = true;
            }
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)] || cls_[static_cast<std::size_t>(v)] != slot_class_[static_cast<std::size_t>(pos)]) continue;
            std::uint64_t next = prefix;
            for (int q = 0; q < pos; ++q) next = (next << 1) | (g_.adjacent(order_[static_cast<std::size_t>(q)], v) ? 1U : 0U);
            if (found_) {
                const int bits = pos * (pos + 1) / 2;
                const std::uint64_t best_prefix = bits == 0 ? 0 : best_ >> (total_bits_ - bits);
                if (next > best_prefix) continue;
            }
            used_[static_cast<std::size_t>(v)] = true;
            order_[static_cast<std::size_t>(pos)] = v;
            extend(pos + 1, next);
            used_[static_cast<std::size_t>(v)] = false;
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_ = 0;
    std::vector<int> cls_;
    std::vector<int> slot_class_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
    std::uint64_t best_ = 0;
    bool found_ = false;
};

class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {
        const int n = a.order();
        order_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
        map_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
    }

    bool run() { return extend(0); }

private:
    bool extend(std::size_t idx) {
        if (idx == order_.size()) return true;
        const Vertex v = order_[idx];
        for (Vertex w = 0; w < b_.order(); ++w) {
            if (used_[static_cast<std::size_t>(w)] || b_.degree(w) != a_.degree(v)) continue;
            bool consistent = true;
            for (std::size_t j = 0; j < idx && consistent; ++j) {
                const Vertex u = order_[j];
                consistent = a_.adjacent(u, v) == b_.adjacent(map_[static_cast<std::size_t>(u)], w);
            }
            if (!consistent) continue;
            map_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = true;
            if (extend(idx + 1)) return true;
            used_[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
};

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw std::invalid_argument("canonical_key: order " + std::to_string(g.order()) + " exceeds " +
                                    std::to_string(kMaxCanonicalOrder));
    }
    return CanonicalSearch(g).run();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    return IsoSearch(a, b).run();
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("all_graphs: order must lie in 0..8");
    std::vector<Graph> level{build_graph(0, {})};
    for (int order = 1; order <= n; ++order) {
        std::map<std::uint64_t, Graph> seen;
        const Vertex fresh = order - 1;
        for (const Graph& base : level) {
            const auto base_edges = base.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fresh); ++mask) {
                auto edges = base_edges;
                for (Vertex u = 0; u < fresh; ++u) {
                    if ((mask >> u) & 1U) edges.emplace_back(u, fresh);
                }
                Graph g = build_graph(order, edges);
                seen.try_emplace(canonical_key(g), std::move(g));
            }
        }
        level.clear();
        for (auto& [key, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace domlab
