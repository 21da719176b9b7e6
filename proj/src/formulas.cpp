#include "domlab/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace domlab {

namespace {

// Floor and ceiling of a/b for b > 0 and any sign of a.
long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

int ceil_quarter(int n) { return static_cast<int>(ceil_div(n, 4)); }

std::string num(long long v) { return std::to_string(v); }

}  // namespace

FormulaVerdict FormulaVerdict::exact(int value, std::string reason) {
    return {VerdictKind::exact, value, value, true, std::move(reason)};
}

FormulaVerdict FormulaVerdict::at_least(int value, std::string reason) {
    return {VerdictKind::lower_bound, value, std::nullopt, true, std::move(reason)};
}

FormulaVerdict FormulaVerdict::at_most(int value, std::string reason) {
    return {VerdictKind::upper_bound, std::nullopt, value, true, std::move(reason)};
}

FormulaVerdict FormulaVerdict::between(int lo, int hi, std::string reason) {
    if (lo > hi) throw std::logic_error("FormulaVerdict::between: empty interval");
    return {VerdictKind::interval, lo, hi, true, std::move(reason)};
}

FormulaVerdict FormulaVerdict::inapplicable(std::string reason) {
    return {VerdictKind::exact, std::nullopt, std::nullopt, false, std::move(reason)};
}

int FormulaVerdict::value() const {
    if (!applicable || kind != VerdictKind::exact) throw std::logic_error("FormulaVerdict: no exact value (" + reason + ")");
    return *lower;
}

bool FormulaVerdict::admits(int observed) const {
    if (!applicable) return true;
    if (lower && observed < *lower) return false;
    if (upper && observed > *upper) return false;
    return true;
}

std::string FormulaVerdict::to_string() const {
    if (!applicable) return "n/a";
    switch (kind) {
        case VerdictKind::exact: return num(*lower);
        case VerdictKind::lower_bound: return ">=" + num(*lower);
        case VerdictKind::upper_bound: return "<=" + num(*upper);
        case VerdictKind::interval: return "[" + num(*lower) + "," + num(*upper) + "]";
    }
    return "n/a";
}

FormulaVerdict f_complete(int n, int k) {
    if (k < 1 || k >= n) return FormulaVerdict::inapplicable("needs 1 <= k < n");
    if (n <= 2 * k + 1) return FormulaVerdict::exact(n, "n <= 2k+1");
    return FormulaVerdict::exact(k + 1, "n >= 2k+2");
}

FormulaVerdict f_complement_cycle(int n, int k) {
    if (k < 1 || n < k + 3) return FormulaVerdict::inapplicable("needs n >= k+3 >= 4");
    if (n <= 2 * k + 2) return FormulaVerdict::exact(n, "n <= 2k+2");
    if (n <= 3 * k + 2) return FormulaVerdict::exact(k + 2, "2k+3 <= n <= 3k+2");
    return FormulaVerdict::exact(k + 1, "n >= 3k+3");
}

FormulaVerdict f_complement_path(int n, int k) {
    if (k < 1 || n < k + 3) return FormulaVerdict::inapplicable("needs n >= k+3 >= 4");
    if (k == 1) {
        if (n == 4) return FormulaVerdict::exact(n, "k = 1, n = 4");
        return FormulaVerdict::exact(2, "k = 1, n >= 5");
    }
    if (n <= 2 * k + 2) return FormulaVerdict::exact(n, "n <= 2k+2");
    if (n <= 3 * k) return FormulaVerdict::exact(k + 2, "2k+3 <= n <= 3k");
    return FormulaVerdict::exact(k + 1, "n >= 3k+1");
}

FormulaVerdict f_cycle(int n, int k) {
    if (n < 4) return FormulaVerdict::inapplicable("needs n >= 4");
    if (k == 2) return FormulaVerdict::exact(n, "k = 2");
    if (k != 1) return FormulaVerdict::inapplicable("k >= 3 exceeds delta(C_n) = 2");
    const int q = ceil_quarter(n);
    switch (n % 4) {
        case 1: return FormulaVerdict::exact(2 * q - 1, "n = 1 mod 4");
        case 3: return FormulaVerdict::exact(2 * q + 1, "n = 3 mod 4");
        default: return FormulaVerdict::exact(2 * q, "n = 0, 2 mod 4");
    }
}

FormulaVerdict f_complete_bipartite(int n, int m, int k) {
    const int big = std::max(n, m);
    const int small = std::min(n, m);
    if (k < 1 || small < k) return FormulaVerdict::inapplicable("needs n >= m >= k >= 1");
    if (small >= 2 * k) return FormulaVerdict::exact(2 * k, "n >= m >= 2k");
    return FormulaVerdict::exact(big + small, "m < 2k");
}

FormulaVerdict f_bipartite_bounds(int n, int k) {
    if (k < 1 || n < 2 * k) return FormulaVerdict::inapplicable("needs n >= 2k, k >= 1");
    return FormulaVerdict::between(2 * k, n, "bipartite, delta >= k");
}

FormulaVerdict f_multipartite_bounds(const PartitionSpec& parts, int k, std::optional<int> t0, std::optional<int> gamma) {
    parts.validate();
    const int p = parts.part_count();
    const int n = parts.order();
    if (p < 3) return FormulaVerdict::inapplicable("needs p >= 3");
    if (k < 1) return FormulaVerdict::inapplicable("needs k >= 1");
    if (gamma && *gamma >= n) return FormulaVerdict::inapplicable("gamma = n");
    const int lo = static_cast<int>(ceil_div(static_cast<long long>(k) * p, p - 1));
    int hi = n - k;
    std::string reason = "gamma < n";
    if (t0 && *t0 >= 2) {
        hi = n - k - static_cast<int>(ceil_div(k, *t0 - 1));
        reason += ", t0 = " + num(*t0);
    }
    if (lo > hi) return FormulaVerdict::inapplicable("empty interval [" + num(lo) + "," + num(hi) + "]: gamma < n impossible");
    return FormulaVerdict::between(lo, hi, reason);
}

FormulaVerdict f_lower_edges(int n, int m, int k) {
    if (k < 1) return FormulaVerdict::inapplicable("needs k >= 1");
    // 3n/2 - m/k = (3nk - 2m) / 2k
    const long long numerator = 3LL * n * k - 2LL * m;
    const long long denominator = 2LL * k;
    return FormulaVerdict::at_least(static_cast<int>(ceil_div(numerator, denominator)),
                                    "3n/2 - m/k = " + num(numerator) + "/" + num(denominator));
}

FormulaVerdict f_domatic_complete(int n, int k) {
    if (k < 1 || k >= n) return FormulaVerdict::inapplicable("needs 1 <= k < n");
    return FormulaVerdict::exact(n / (k + 1), "floor(n/(k+1))");
}

FormulaVerdict f_domatic_caps(int n, int k, bool bipartite) {
    if (k < 1) return FormulaVerdict::inapplicable("needs k >= 1");
    if (bipartite) return FormulaVerdict::at_most(n / (2 * k), "bipartite: n/2k = " + num(n) + "/" + num(2 * k));
    return FormulaVerdict::at_most(n / (k + 1), "n/(k+1) = " + num(n) + "/" + num(k + 1));
}

FormulaVerdict f_prism_cycle(int n, int k) {
    if (n < 4) return FormulaVerdict::inapplicable("needs n >= 4");
    if (k == 1) {
        const int q = ceil_quarter(n);
        switch (n % 4) {
            case 0: return FormulaVerdict::exact(2 * q + 2, "k = 1, n = 0 mod 4");
            case 3: return FormulaVerdict::exact(2 * q + 1, "k = 1, n = 3 mod 4");
            default: return FormulaVerdict::exact(2 * q, "k = 1, n = 1, 2 mod 4");
        }
    }
    if (k == 2) {
        if (n <= 5) return FormulaVerdict::exact(2 * n, "k = 2, n = 4, 5");
        return FormulaVerdict::exact(n + 2, "k = 2, n >= 6");
    }
    return FormulaVerdict::inapplicable("needs k in {1, 2}");
}

FormulaVerdict f_prism_path(int n) {
    if (n < 4) return FormulaVerdict::inapplicable("needs n >= 4");
    const int q = ceil_quarter(n);
    switch (n % 4) {
        case 0: return FormulaVerdict::exact(2 * q + 2, "n = 0 mod 4");
        case 3: return FormulaVerdict::exact(2 * q + 1, "n = 3 mod 4");
        default: return FormulaVerdict::exact(2 * q, "n = 1, 2 mod 4");
    }
}

FormulaVerdict f_prism_regular_lb(int n, int ell, int k) {
    if (!(1 <= k - 1 && k - 1 <= ell && ell <= 2 * k - 2)) {
        return FormulaVerdict::inapplicable("needs 1 <= k-1 <= l <= 2k-2");
    }
    if (ell > n - 1) return FormulaVerdict::inapplicable("no l-regular graph of order n");
    if (n <= ell + 2 * k - 1) return FormulaVerdict::exact(2 * n, "n <= l+2k-1");
    return FormulaVerdict::at_least(n + k, "n >= l+2k");
}

FormulaVerdict f_prism_sandwich(int k, std::optional<int> lower_g, std::optional<int> lower_gbar, int upper_g,
                                int upper_gbar) {
    if (k < 1) return FormulaVerdict::inapplicable("needs k >= 1");
    const int hi = upper_g + upper_gbar;
    if (k >= 2 && lower_g && lower_gbar) {
        const int lo = *lower_g + *lower_gbar;
        if (lo > hi) throw std::logic_error("f_prism_sandwich: lower end exceeds upper end");
        return FormulaVerdict::between(lo, hi, "k >= 2");
    }
    return FormulaVerdict::at_most(hi, k == 1 ? "k = 1: upper half only" : "upper half only");
}

FormulaVerdict f_kjoin_gamma(int m, int k) {
    if (k < 1 || m < k + 1) return FormulaVerdict::inapplicable("needs m >= k+1 >= 2");
    return FormulaVerdict::exact(m, m == k + 1 ? "m = k+1" : "m minimal");
}

FormulaVerdict f_prelemma_prisms(int n, PrismOracle which) {
    switch (which) {
        case PrismOracle::total_cycle: {
            if (n < 4) return FormulaVerdict::inapplicable("needs n >= 4");
            const int q = ceil_quarter(n);
            if (n % 4 == 0) return FormulaVerdict::exact(2 * q + 2, "n = 0 mod 4");
            if (n % 4 == 3) return FormulaVerdict::exact(2 * q + 1, "n = 3 mod 4");
            return FormulaVerdict::exact(2 * q, "n = 1, 2 mod 4");
        }
        case PrismOracle::double_total_cycle:
            if (n < 5) return FormulaVerdict::inapplicable("needs n >= 5");
            return FormulaVerdict::exact(n + 2, "n >= 5");
        case PrismOracle::total_path: {
            if (n < 4) return FormulaVerdict::inapplicable("needs n >= 4");
            const int q = static_cast<int>(ceil_div(n - 2, 4));
            if (n % 4 == 3) return FormulaVerdict::exact(2 * q + 1, "n = 3 mod 4");
            return FormulaVerdict::exact(2 * q + 2, "n != 3 mod 4");
        }
    }
    return FormulaVerdict::inapplicable("unknown oracle");
}

}  // namespace domlab
