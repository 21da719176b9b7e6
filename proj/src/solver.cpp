#include "domlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string_view>

namespace domlab {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }
int count(Mask m) { return std::popcount(m); }
Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void check_guard(const char* solver, int order, int guard) {
    const int effective = std::min(guard, kMaxSolverOrder);
    if (order > effective) throw GuardExceeded(solver, order, effective);
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighborhood(v).mask();
    return nbr;
}

// Branch-and-bound feasibility search: does a set S with |S| <= budget exist
// that contains `in`, avoids `out`, and satisfies the predicate?
class GammaSearch {
public:
    GammaSearch(const Graph& g, int k, Variant variant)
        : n_(g.order()), k_(k), restrained_(variant == Variant::restrained), nbr_(neighbor_masks(g)) {}

    std::optional<Mask> find(Mask in, Mask out, int budget) {
        budget_ = budget;
        return search(in, out);
    }

    // Root propagation with an unlimited budget: the vertices every feasible
    // set must contain.
    std::optional<Mask> forced() {
        Mask in = 0;
        Mask out = 0;
        budget_ = n_;
        if (!propagate(in, out)) return std::nullopt;
        return in;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    Mask nbr(int v) const { return nbr_[static_cast<std::size_t>(v)]; }

    bool propagate(Mask& in, Mask& out) {
        const Mask all = full_mask(n_);
        bool changed = true;
        while (changed) {
            changed = false;
            if (count(in) > budget_) return false;
            const Mask undecided = all & ~in & ~out;
            for (int v = 0; v < n_; ++v) {
                const Mask nv = nbr(v);
                const int inside = count(nv & in);
                const int excluded = count(nv & out);
                const int open = count(nv & undecided);
                const int need_in = std::max(0, k_ - inside);
                if (need_in > open) return false;
                if (need_in > 0 && need_in == open) {
                    in |= nv & undecided;
                    changed = true;
                    break;
                }
                if (!restrained_ || (in & bit(v)) != 0) continue;
                // v outside S needs k neighbors in S and k neighbors outside S.
                const int need_out = std::max(0, k_ - excluded);
                if (need_in + need_out > open) {
                    if ((out & bit(v)) != 0) return false;
                    in |= bit(v);
                    changed = true;
                    break;
                }
                if ((out & bit(v)) != 0 && need_out > 0 && need_in == 0 && need_out == open) {
                    out |= nv & undecided;
                    changed = true;
                    break;
                }
            }
        }
        return true;
    }

    std::optional<Mask> search(Mask in, Mask out) {
        ++nodes_;
        if (!propagate(in, out)) return std::nullopt;
        const Mask undecided = full_mask(n_) & ~in & ~out;

        int branch_vertex = -1;
        int best_slack = n_ + 1;
        int best_need = 0;
        int total_need = 0;
        Mask deficient = 0;
        for (int v = 0; v < n_; ++v) {
            const int need = k_ - count(nbr(v) & in);
            if (need <= 0) continue;
            deficient |= bit(v);
            total_need += need;
            const int slack = count(nbr(v) & undecided) - need;
            if (slack < best_slack || (slack == best_slack && need > best_need)) {
                best_slack = slack;
                best_need = need;
                branch_vertex = v;
            }
        }
        if (branch_vertex < 0) return in;

        const int budget_left = budget_ - count(in);
        if (best_need > budget_left) return std::nullopt;
        int best_gain = 0;
        for (Mask rest = undecided; rest != 0; rest &= rest - 1) {
            best_gain = std::max(best_gain, count(nbr(std::countr_zero(rest)) & deficient));
        }
        if (best_gain * budget_left < total_need) return std::nullopt;

        const Mask candidates = nbr(branch_vertex) & undecided;
        const Mask pick = candidates & (~candidates + 1);
        if (auto found = search(in | pick, out)) return found;
        return search(in, out | pick);
    }

    int n_;
    int k_;
    bool restrained_;
    std::vector<Mask> nbr_;
    int budget_ = 0;
    std::uint64_t nodes_ = 0;
};

// Backtracking assignment of vertices to `classes` classes.
class DomaticSearch {
public:
    DomaticSearch(const Graph& g, int k, Variant variant)
        : n_(g.order()), k_(k), restrained_(variant == Variant::restrained), nbr_(neighbor_masks(g)) {
        // BFS order from vertex 0 so that neighborhoods fill in early.
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int root = 0; root < n_; ++root) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            std::queue<int> frontier;
            frontier.push(root);
            seen[static_cast<std::size_t>(root)] = true;
            while (!frontier.empty()) {
                int v = frontier.front();
                frontier.pop();
                order_.push_back(v);
                for (Vertex u : g.neighbors(v)) {
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = true;
                        frontier.push(u);
                    }
                }
            }
        }
    }

    std::optional<std::vector<Mask>> find(int classes) {
        classes_.assign(static_cast<std::size_t>(classes), 0);
        class_of_.assign(static_cast<std::size_t>(n_), -1);
        unassigned_ = full_mask(n_);
        for (int v = 0; v < n_; ++v) {
            if (count(nbr(v)) < classes * k_) return std::nullopt;
        }
        if (assign(0, 0)) return classes_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    Mask nbr(int v) const { return nbr_[static_cast<std::size_t>(v)]; }

    bool class_ok(int c) const {
        const Mask members = classes_[static_cast<std::size_t>(c)];
        for (int v = 0; v < n_; ++v) {
            if (count(nbr(v) & members) < k_) return false;
            if (restrained_ && (members & bit(v)) == 0 && count(nbr(v) & ~members) < k_) return false;
        }
        return true;
    }

    bool consistent_after(int v, int c) const {
        const int d = static_cast<int>(classes_.size());
        for (Mask rest = nbr(v); rest != 0; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            const int open = count(nbr(w) & unassigned_);
            for (int other = 0; other < d; ++other) {
                if (count(nbr(w) & classes_[static_cast<std::size_t>(other)]) + open < k_) return false;
            }
            const int cw = class_of_[static_cast<std::size_t>(w)];
            if (restrained_ && cw >= 0 && cw != c && count(nbr(w) & ~classes_[static_cast<std::size_t>(c)]) < k_) {
                return false;
            }
        }
        if (restrained_) {
            for (int other = 0; other < d; ++other) {
                if (other != c && count(nbr(v) & ~classes_[static_cast<std::size_t>(other)]) < k_) return false;
            }
        }
        return true;
    }

    bool assign(std::size_t idx, int used) {
        ++nodes_;
        const int d = static_cast<int>(classes_.size());
        const int remaining = n_ - static_cast<int>(idx);
        // Every class still empty needs at least k+1 members.
        if ((d - used) * (k_ + 1) > remaining) return false;
        if (idx == order_.size()) {
            for (int c = 0; c < d; ++c) {
                if (!class_ok(c)) return false;
            }
            return true;
        }
        const int v = order_[idx];
        unassigned_ &= ~bit(v);
        const int limit = std::min(used, d - 1);
        for (int c = 0; c <= limit; ++c) {
            classes_[static_cast<std::size_t>(c)] |= bit(v);
            class_of_[static_cast<std::size_t>(v)] = c;
            if (consistent_after(v, c) && assign(idx + 1, std::max(used, c + 1))) return true;
            classes_[static_cast<std::size_t>(c)] &= ~bit(v);
            class_of_[static_cast<std::size_t>(v)] = -1;
        }
        unassigned_ |= bit(v);
        return false;
    }

    int n_;
    int k_;
    bool restrained_;
    std::vector<Mask> nbr_;
    std::vector<int> order_;
    std::vector<Mask> classes_;
    std::vector<int> class_of_;
    Mask unassigned_ = 0;
    std::uint64_t nodes_ = 0;
};

// Advances `idx` (strictly increasing indices into 0..n-1) to the next
// combination in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
    const int r = static_cast<int>(idx.size());
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

template <typename Visit>
void for_each_combination(int n, int r, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
        if (!visit(idx)) return;
    } while (r > 0 && next_combination(idx, n));
}

}  // namespace

SolverLimits SolverLimits::uniform(int n) {
    const int guard = std::clamp(n, 1, kMaxSolverOrder);
    return SolverLimits{guard, guard, guard, guard, guard};
}

SolverLimits SolverLimits::from_environment() {
    const char* raw = std::getenv("DOMLAB_GUARD_N");
    if (raw == nullptr) return {};
    std::string_view text(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) return {};
    return uniform(value);
}

GuardExceeded::GuardExceeded(const std::string& solver, int order, int guard)
    : std::runtime_error(solver + ": order " + std::to_string(order) + " exceeds guard " + std::to_string(guard)),
      order_(order),
      guard_(guard) {}

SolveResult gamma_exact(const DominationQuery& q, const SolverLimits& limits) {
    q.validate();
    const Graph& g = q.graph;
    const int n = g.order();
    check_guard("gamma_exact", n, limits.exact_max);
    const auto start = Clock::now();
    SolveResult result;
    result.certificate = VertexSet(n);
    if (n == 0 || g.min_degree() < q.k) {
        result.elapsed = Clock::now() - start;
        return result;
    }

    GammaSearch search(g, q.k, q.variant);
    const auto forced = search.forced();
    int target = std::max(q.k + 1, forced ? count(*forced) : 0);
    std::optional<Mask> found;
    for (; target <= n && !found; ++target) found = search.find(0, 0, target);
    if (!found) {
        // Unreachable when delta >= k: V itself satisfies both predicates.
        throw std::logic_error("gamma_exact: no feasible set although delta >= k");
    }
    const int best = count(*found);

    // Lexicographically smallest minimum set: keep vertex v whenever some
    // minimum set extends the decisions made so far and contains v.
    Mask current = *found;
    Mask in = 0;
    Mask out = 0;
    for (int v = 0; v < n; ++v) {
        if ((current & bit(v)) != 0) {
            in |= bit(v);
            continue;
        }
        if (auto alt = search.find(in | bit(v), out, best)) {
            current = *alt;
            in |= bit(v);
        } else {
            out |= bit(v);
        }
    }

    result.status = SolveStatus::solved;
    result.value = count(current);
    result.certificate = VertexSet::from_mask(n, current);
    result.nodes_explored = search.nodes();
    result.elapsed = Clock::now() - start;
    return result;
}

SolveResult gamma_naive(const DominationQuery& q, const SolverLimits& limits) {
    q.validate();
    const Graph& g = q.graph;
    const int n = g.order();
    check_guard("gamma_naive", n, limits.naive_max);
    const auto start = Clock::now();
    SolveResult result;
    result.certificate = VertexSet(n);
    for (int size = 0; size <= n && !result.feasible(); ++size) {
        for_each_combination(n, size, [&](const std::vector<int>& idx) {
            ++result.nodes_explored;
            VertexSet s(n, idx);
            if (!satisfies(g, s, q.k, q.variant)) return true;
            result.status = SolveStatus::solved;
            result.value = size;
            result.certificate = std::move(s);
            return false;
        });
    }
    result.elapsed = Clock::now() - start;
    return result;
}

SolveResult domatic_exact(const DominationQuery& q, const SolverLimits& limits) {
    q.validate();
    const Graph& g = q.graph;
    const int n = g.order();
    check_guard("domatic_exact", n, limits.domatic_max);
    const auto start = Clock::now();
    SolveResult result;
    if (n == 0 || g.min_degree() < q.k) {
        result.elapsed = Clock::now() - start;
        return result;
    }
    result.status = SolveStatus::solved;
    result.value = 1;
    result.partition = {VertexSet::all(n)};

    DomaticSearch search(g, q.k, q.variant);
    const int top = std::min(n / (q.k + 1), g.min_degree() / q.k);
    for (int d = top; d >= 2; --d) {
        if (auto classes = search.find(d)) {
            result.value = d;
            result.partition.clear();
            for (Mask c : *classes) result.partition.push_back(VertexSet::from_mask(n, c));
            break;
        }
    }
    result.nodes_explored = search.nodes();
    result.elapsed = Clock::now() - start;
    return result;
}

MultipartiteAnalysis t0_exact(const PartitionSpec& parts, int k, const SolverLimits& limits) {
    parts.validate();
    if (k < 1) throw std::invalid_argument("t0_exact: k must be at least 1");
    const Graph g = complete_multipartite(parts);
    const int n = g.order();
    check_guard("t0_exact", n, limits.t0_max);

    std::vector<Mask> part_masks;
    int offset = 0;
    for (int size : parts.parts) {
        part_masks.push_back((full_mask(size) << offset));
        offset += size;
    }

    // t ranges over proper sets only (S = V has t = 0 trivially); with no
    // proper set, t0 stays 0.
    MultipartiteAnalysis analysis{parts, k, false, 0, n};
    std::optional<int> best_t;
    const Mask all = full_mask(n);
    for (Mask s = 0;; ++s) {
        if (is_ktrds(g, VertexSet::from_mask(n, s), k)) {
            analysis.feasible = true;
            analysis.gamma = std::min(analysis.gamma, count(s));
            if (s != all) {
                int t = 0;
                for (Mask part : part_masks) t += (s & part) != part ? 1 : 0;
                best_t = best_t ? std::min(*best_t, t) : t;
            }
        }
        if (s == all) break;
    }
    analysis.t0 = best_t.value_or(0);
    if (!analysis.feasible) analysis.gamma = 0;
    return analysis;
}

std::vector<VertexSet> enumerate_optimal_sets(const DominationQuery& q, const SolverLimits& limits) {
    q.validate();
    const int n = q.graph.order();
    check_guard("enumerate_optimal_sets", n, limits.enumerate_max);
    const SolveResult best = gamma_exact(q, SolverLimits::uniform(std::max(n, limits.exact_max)));
    std::vector<VertexSet> sets;
    if (!best.feasible()) return sets;
    for_each_combination(n, best.value, [&](const std::vector<int>& idx) {
        VertexSet s(n, idx);
        if (satisfies(q.graph, s, q.k, q.variant)) sets.push_back(std::move(s));
        return true;
    });
    return sets;
}

std::vector<VertexSet> enumerate_dominating_sets(const DominationQuery& q, const SolverLimits& limits) {
    q.validate();
    const int n = q.graph.order();
    check_guard("enumerate_dominating_sets", n, limits.enumerate_max);
    std::vector<VertexSet> sets;
    const Mask all = full_mask(n);
    for (Mask s = 0;; ++s) {
        VertexSet candidate = VertexSet::from_mask(n, s);
        if (satisfies(q.graph, candidate, q.k, q.variant)) sets.push_back(std::move(candidate));
        if (s == all) break;
    }
    return sets;
}

}  // namespace domlab
