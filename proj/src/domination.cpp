#include "domlab/domination.hpp"

#include <stdexcept>

namespace domlab {

std::string_view to_string(Variant v) { return v == Variant::total ? "total" : "restrained"; }

Variant parse_variant(std::string_view text) {
    if (text == "total") return Variant::total;
    if (text == "restrained") return Variant::restrained;
    throw std::invalid_argument("unknown variant \"" + std::string(text) + "\" (expected total or restrained)");
}

void DominationQuery::validate() const {
    if (k < 1) throw std::invalid_argument("DominationQuery: k must be at least 1, got " + std::to_string(k));
}

std::string Violation::describe() const {
    return "vertex " + std::to_string(vertex + 1) + " has " + std::to_string(neighbors) +
           (condition == "in-set" ? " neighbors in S" : " neighbors outside S");
}

std::optional<Violation> first_violation(const Graph& g, const VertexSet& s, int k, Variant variant) {
    if (s.host_size() != g.order()) throw std::invalid_argument("vertex set does not belong to the graph");
    for (Vertex v = 0; v < g.order(); ++v) {
        const int inside = g.neighborhood(v).intersection_size(s);
        if (inside < k) return Violation{v, "in-set", inside};
        if (variant == Variant::restrained && !s.contains(v)) {
            const int outside = g.degree(v) - inside;
            if (outside < k) return Violation{v, "outside", outside};
        }
    }
    return std::nullopt;
}

bool satisfies(const Graph& g, const VertexSet& s, int k, Variant variant) {
    return !first_violation(g, s, k, variant).has_value();
}

bool is_ktds(const Graph& g, const VertexSet& s, int k) { return satisfies(g, s, k, Variant::total); }

bool is_ktrds(const Graph& g, const VertexSet& s, int k) { return satisfies(g, s, k, Variant::restrained); }

bool is_domatic_partition(const Graph& g, const std::vector<VertexSet>& classes, int k, Variant variant) {
    if (classes.empty()) return false;
    VertexSet covered(g.order());
    for (const auto& c : classes) {
        if (c.host_size() != g.order() || c.intersects(covered)) return false;
        covered |= c;
    }
    if (covered.size() != g.order()) return false;
    for (const auto& c : classes) {
        if (!satisfies(g, c, k, variant)) return false;
    }
    return true;
}

bool is_ktrdp(const Graph& g, const std::vector<VertexSet>& classes, int k) {
    return is_domatic_partition(g, classes, k, Variant::restrained);
}

}  // namespace domlab
