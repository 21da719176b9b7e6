#include "domlab/witness.hpp"

#include <stdexcept>

namespace domlab {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Collects 1-based labels of a graph on `host` vertices; `bar` shifts a
// label into the complement half of a complementary prism of order n.
class SetBuilder {
public:
    SetBuilder(int host, int n) : set_(host), n_(n) {}

    SetBuilder& plain(int one_based) {
        add(one_based - 1);
        return *this;
    }
    SetBuilder& bar(int one_based) {
        if (one_based < 1 || one_based > n_) out_of_range(one_based);
        add(n_ + one_based - 1);
        return *this;
    }
    SetBuilder& both(int one_based) { return plain(one_based).bar(one_based); }
    /// {first + 4i, first + 1 + 4i | 0 <= i <= last}
    SetBuilder& pairs_step4(int first, int last) {
        for (int i = 0; i <= last; ++i) plain(first + 4 * i).plain(first + 1 + 4 * i);
        return *this;
    }

    VertexSet build() const { return set_; }

private:
    void add(int zero_based) {
        if (zero_based < 0 || zero_based >= set_.host_size()) out_of_range(zero_based + 1);
        set_.insert(zero_based);
    }
    [[noreturn]] static void out_of_range(int label) {
        throw std::logic_error("witness construction produced out-of-range vertex " + std::to_string(label));
    }

    VertexSet set_;
    int n_;
};

}  // namespace

Witness::Witness(VertexSet s, std::string src) : set(std::move(s)), source(std::move(src)), claimed_size(set.size()) {}

Witness::Witness(VertexSet s, VertexSet second, std::string src)
    : set(std::move(s)), partner(std::move(second)), source(std::move(src)), claimed_size(set.size()) {}

std::string Witness::to_string() const {
    std::string out = source + ": " + set.to_string_one_based();
    if (partner) out += " | " + partner->to_string_one_based();
    return out;
}

Witness witness_cycle_trds(int n) {
    if (n < 4) throw std::invalid_argument("witness_cycle_trds: requires n >= 4");
    SetBuilder b(n, n);
    b.pairs_step4(2, n / 4 - 1);
    switch (n % 4) {
        case 0: return {b.build(), "cycle-trds/r0"};
        case 1: return {b.plain(n - 1).build(), "cycle-trds/r1"};
        case 2: return {b.plain(1).plain(n - 2).build(), "cycle-trds/r2"};
        default: return {b.plain(1).plain(n - 3).plain(n).build(), "cycle-trds/r3"};
    }
}

Witness witness_complement_cycle(int n, int k) {
    if (k < 1 || n < k + 3) throw std::invalid_argument("witness_complement_cycle: requires n >= k+3 >= 4");
    SetBuilder b(n, n);
    if (n >= 3 * k + 3) {
        for (int i = 0; i <= k; ++i) b.plain(3 * i + 1);
        return {b.build(), "complement-cycle/spaced3"};
    }
    if (n >= 2 * k + 3) {
        for (int i = 0; i <= k + 1; ++i) b.plain(2 * i + 1);
        return {b.build(), "complement-cycle/spaced2"};
    }
    return {VertexSet::all(n), "complement-cycle/all"};
}

Witness witness_complement_path(int n, int k) {
    if (k < 1 || n < k + 3) throw std::invalid_argument("witness_complement_path: requires n >= k+3 >= 4");
    SetBuilder b(n, n);
    if (k == 1) {
        // For n = 5 the middle vertex sees only 1 and 5 in the complement.
        if (n == 5) return {b.plain(1).plain(4).build(), "complement-path/n5"};
        if (n >= 6) return {b.plain(1).plain(n).build(), "complement-path/ends"};
        return {VertexSet::all(n), "complement-path/all"};
    }
    if (n >= 3 * k + 1) {
        for (int i = 0; i <= k - 1; ++i) b.plain(3 * i + 1);
        return {b.plain(n).build(), "complement-path/spaced3"};
    }
    if (n >= 2 * k + 3) {
        // Same set as for the complement of C_n, a spanning subgraph.
        for (int i = 0; i <= k + 1; ++i) b.plain(2 * i + 1);
        return {b.build(), "complement-path/spaced2"};
    }
    return {VertexSet::all(n), "complement-path/all"};
}

Witness witness_prism_cycle_domatic_pair(int n) {
    if (n < 4) throw std::invalid_argument("witness_prism_cycle_domatic_pair: requires n >= 4");
    const int host = 2 * n;
    const int q = ceil_div(n, 4);
    SetBuilder s(host, n);
    SetBuilder t(host, n);
    std::string tag;
    switch (n % 4) {
        case 0:
            tag = "prism-cycle-pair/case1";
            s.both(1).both(2);
            t.both(3).both(4);
            if (n > 4) {
                s.pairs_step4(5, q - 2);
                t.pairs_step4(7, q - 2);
            }
            break;
        case 1:
            tag = "prism-cycle-pair/case2";
            if (n == 5) {
                s.both(1).both(4);
                t.both(2).both(5);
            } else if (n == 9) {
                s.both(1).both(4).both(7);
                t.both(2).both(5).both(8);
            } else {
                s.both(1).both(4).both(7).pairs_step4(10, q - 4);
                t.both(3).both(6).both(9).pairs_step4(12, q - 4);
            }
            break;
        case 2:
            tag = "prism-cycle-pair/case3";
            if (n == 6) {
                s.both(1).both(4);
                t.both(2).both(5);
            } else {
                s.both(1).both(4).pairs_step4(7, q - 3);
                t.both(3).both(6).pairs_step4(9, q - 3);
            }
            break;
        default:
            tag = "prism-cycle-pair/case4";
            if (n == 7) {
                s.both(1).both(4).bar(6);
                t.both(2).both(5).bar(7);
            } else {
                s.both(1).both(4).bar(n - 1).pairs_step4(7, q - 3);
                t.plain(2).both(3).both(6).pairs_step4(9, q - 3);
            }
            break;
    }
    return {s.build(), t.build(), tag};
}

Witness witness_prism_path_trds(int n) {
    if (n < 4) throw std::invalid_argument("witness_prism_path_trds: requires n >= 4");
    const int host = 2 * n;
    SetBuilder b(host, n);
    if (n == 4) {
        // The residue-0 construction starts at n = 8; this set covers n = 4.
        return {b.both(2).both(3).build(), "prism-path-trds/n4"};
    }
    switch (n % 4) {
        case 0:
            if (n == 8) return {b.bar(1).bar(8).plain(3).plain(4).plain(5).plain(6).build(), "prism-path-trds/r0"};
            b.bar(1).bar(n - 6).bar(n - 5).bar(n).plain(n - 3).plain(n - 2).pairs_step4(3, n / 4 - 3);
            return {b.build(), "prism-path-trds/r0"};
        case 1:
            b.bar(1).bar(n - 2).bar(n).plain(n - 2).pairs_step4(3, n / 4 - 2);
            return {b.build(), "prism-path-trds/r1"};
        case 2:
            b.bar(1).bar(n).pairs_step4(3, n / 4 - 1);
            return {b.build(), "prism-path-trds/r2"};
        default:
            b.bar(1).bar(n - 1).bar(n).pairs_step4(3, n / 4 - 1);
            return {b.build(), "prism-path-trds/r3"};
    }
}

std::vector<VertexSet> completed_partition(const Witness& pair) {
    if (!pair.partner) throw std::invalid_argument("completed_partition: witness is not a pair");
    return {pair.set, pair.set.complement()};
}

std::string WitnessCheck::describe() const {
    if (ok()) return "valid";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += "; ";
        out += part;
    };
    if (!disjoint) append("classes overlap");
    if (violation) append("S: " + violation->describe());
    if (partner_violation) append("S': " + partner_violation->describe());
    if (size_match && !*size_match) append("size differs from formula");
    if (partition_valid) append(*partition_valid ? "completed partition valid" : "completed partition invalid");
    return out.empty() ? "invalid" : out;
}

WitnessCheck validate_witness(const Graph& g, const Witness& w, int k, std::optional<int> expected_size) {
    WitnessCheck check;
    if (w.set.host_size() != g.order() || (w.partner && w.partner->host_size() != g.order())) {
        check.valid = false;
        check.size_match = expected_size ? std::optional<bool>(false) : std::nullopt;
        return check;
    }
    if (!w.partner) {
        check.violation = first_violation(g, w.set, k, Variant::restrained);
        check.valid = !check.violation;
        if (expected_size) check.size_match = w.set.size() == *expected_size;
        return check;
    }
    check.disjoint = !w.set.intersects(*w.partner);
    check.violation = first_violation(g, w.set, k, Variant::total);
    check.partner_violation = first_violation(g, *w.partner, k, Variant::total);
    check.valid = check.disjoint && !check.violation && !check.partner_violation;
    if (expected_size) check.size_match = w.set.size() == *expected_size && w.partner->size() == *expected_size;
    check.partition_valid = is_domatic_partition(g, completed_partition(w), k, Variant::total);
    return check;
}

}  // namespace domlab
