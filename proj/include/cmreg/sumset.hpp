#pragma once
// Sumset counting for the degree semigroup of the monomial curves
// (1, m*n^2, m*n*(n+1), m*(n+1)^2) in P^4.
//
// For S = {0, 1, m*n^2, m*n*(n+1), m*(n+1)^2}, the alpha-fold sumset
// alpha*S = { s_1 + ... + s_alpha : s_i in S } has |alpha*S| equal to the
// Hilbert function of the curve's homogeneous coordinate ring in degree
// alpha.  Two independent counts are provided:
//   * sumset_count_oracle  — dynamic program over reachable sums (any base),
//   * sumset_count_closed  — closed formula, valid for
//                            alpha >= closed_form_threshold().
// The closed count subtracts a "gap" correction gap_count_closed(alpha),
// which vanishes for alpha >= gap_vanishing_threshold().

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cmreg {

struct SumsetSpec {
    long long m = 1;
    long long n = 1;

    explicit SumsetSpec(long long m_, long long n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw std::invalid_argument("SumsetSpec: parameters must be >= 1");
    }

    // The generating set, sorted with duplicates removed (m = n = 1 collapses
    // 1 and m*n^2).
    std::vector<long long> base() const {
        std::vector<long long> b = {0, 1, m * n * n, m * n * (n + 1), m * (n + 1) * (n + 1)};
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return b;
    }

    // Smallest alpha for which sumset_count_closed applies.
    long long closed_form_threshold() const { return m * n + m + 2 * n; }

    // Smallest alpha for which gap_count_closed applies.
    long long gap_formula_threshold() const { return m * n + m + n; }

    // gap_count_closed(alpha) == 0 for every alpha >= this value.
    long long gap_vanishing_threshold() const { return m * n * n - 1; }

    // Lower bound ceil(m^2 n^5 / 4) for the total gap count
    // sum_alpha gap_count_closed(alpha) (equivalently, for the length of the
    // first local cohomology of the curve's coordinate ring).
    long long total_gap_lower_bound() const {
        long long num = m * m * n * n * n * n * n;
        return (num + 3) / 4;
    }
};

// |alpha * base| by dynamic programming: reachable sums of exactly alpha
// terms from `base`.  Requires every element >= 0 and 0 present (so "exactly
// alpha" and "at most alpha" agree); alpha >= 0.
inline long long sumset_count_oracle(const std::vector<long long>& base, long long alpha) {
    if (alpha < 0) throw std::invalid_argument("sumset_count_oracle: alpha must be >= 0");
    if (base.empty()) throw std::invalid_argument("sumset_count_oracle: empty base");
    long long maxel = 0;
    bool has_zero = false;
    for (long long b : base) {
        if (b < 0) throw std::invalid_argument("sumset_count_oracle: negative element");
        maxel = std::max(maxel, b);
        if (b == 0) has_zero = true;
    }
    if (!has_zero) throw std::invalid_argument("sumset_count_oracle: base must contain 0");
    const std::size_t cap = static_cast<std::size_t>(maxel * alpha) + 1;
    std::vector<char> reach(cap, 0);
    reach[0] = 1;
    for (long long step = 0; step < alpha; ++step) {
        std::vector<char> next = reach;  // adding 0 keeps every current sum
        for (long long b : base) {
            if (b == 0) continue;
            for (std::size_t s = cap; s-- > static_cast<std::size_t>(b);)
                if (reach[s - static_cast<std::size_t>(b)]) next[s] = 1;
        }
        reach.swap(next);
    }
    long long count = 0;
    for (char c : reach) count += c;
    return count;
}

// Number of "gaps" in degree alpha: the correction subtracted from the
// leading linear term in sumset_count_closed.  Zero for
// alpha >= gap_vanishing_threshold(); for
// gap_formula_threshold() <= alpha < gap_vanishing_threshold() it equals
//   (a+1)*mu - C(a+1,2)*(m*(2n+1) - 1),
// where mu = m*n^2 - 1 - alpha and a = floor(mu / (m*(2n+1) - 1)).
inline long long gap_count_closed(const SumsetSpec& spec, long long alpha) {
    if (alpha < spec.gap_formula_threshold())
        throw std::invalid_argument("gap_count_closed: alpha below validity threshold");
    if (alpha >= spec.gap_vanishing_threshold()) return 0;
    const long long mu = spec.m * spec.n * spec.n - 1 - alpha;
    const long long step = spec.m * (2 * spec.n + 1) - 1;
    const long long a = mu / step;
    return (a + 1) * mu - (a + 1) * a / 2 * step;
}

// Closed-form |alpha * base| for alpha >= closed_form_threshold():
//   m*(n+1)^2 * alpha - ( C(m,2)*(n+1)^2 + m*(n^2 - 1) ) - gap_count_closed(alpha).
inline long long sumset_count_closed(const SumsetSpec& spec, long long alpha) {
    if (alpha < spec.closed_form_threshold())
        throw std::invalid_argument("sumset_count_closed: alpha below validity threshold");
    const long long m = spec.m, n = spec.n;
    const long long lead = m * (n + 1) * (n + 1);
    const long long constant = m * (m - 1) / 2 * (n + 1) * (n + 1) + m * (n * n - 1);
    return lead * alpha - constant - gap_count_closed(spec, alpha);
}

}  // namespace cmreg
