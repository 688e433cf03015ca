#pragma once

// Validators for the coefficient and binomial-mass inequalities.
//
// The first family bounds the monomial coefficients of products
// S = prod_i (x_{i,1} + ... + x_{i,k}) after the slots are identified with
// formal variables c_1..c_r (distinct within each factor): by the central
// binomial coefficient for k = 2, and by C * k^{n+1} / n^{1/4} with
// C = (3/(2e))^{3/2} for k >= 3. A searcher also probes the sharper
// balanced-multinomial bound, which is conjectural. The second family
// covers the mass inequality binom(n,a) p^a (1-p)^{n-a} < C / sqrt(np(1-p))
// through the function f(n,a,p) = sqrt(n) binom(n,a) p^{a+1/2} (1-p)^{n-a+1/2}
// and its peak at p = (a+1/2)/(n+1).
//
// Enumeration is up to relabeling of the formal variables: factors are
// generated in non-decreasing order with variables numbered by first
// appearance, which visits at least one representative of every relabeling
// class. All inequality comparisons against irrational bounds go through
// outward-rounded intervals; integer comparisons are exact.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rookdist/common.hpp"
#include "rookdist/interval.hpp"
#include "rookdist/polynomial.hpp"

namespace rookdist {

/// n factors of k pairwise-distinct formal variables each; factor lists are
/// ascending, variable ids are 1-based.
struct FormAssignment {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> factors;

    int variable_count() const {
        int r = 0;
        for (const auto& f : factors)
            for (int v : f) r = std::max(r, v);
        return r;
    }

    std::string str() const {
        std::string out;
        for (const auto& f : factors) {
            out += '(';
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) out += '+';
                out += 'c' + std::to_string(f[i]);
            }
            out += ')';
        }
        return out;
    }
};

/// Largest monomial coefficient of the expanded product. All factor
/// coefficients are +1, so every expanded coefficient is positive.
inline BigInt max_monomial_coefficient(const FormAssignment& fa) {
    const int r = fa.variable_count();
    SparsePoly acc = SparsePoly::constant(r, 1);
    for (const auto& f : fa.factors) {
        SparsePoly factor(r);
        for (int v : f) {
            Monomial m(r, 0);
            m[v - 1] = 1;
            factor.add_term(std::move(m), 1);
        }
        acc = poly_mul(acc, factor);
    }
    BigInt best = 0;
    for (const auto& [m, c] : acc.terms()) best = std::max(best, c);
    return best;
}

namespace detail {

inline void factor_candidates(int k, int used, int r_max, const std::vector<int>& at_least,
                              std::vector<std::vector<int>>& out) {
    // Ascending k-tuples over old variables 1..used plus new variables, which
    // must be introduced consecutively (first-appearance numbering).
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_next, int new_high) -> void {
        if (static_cast<int>(cur.size()) == k) {
            if (!at_least.empty() && cur < at_least) return;
            out.push_back(cur);
            return;
        }
        for (int v = min_next; v <= used; ++v) {
            cur.push_back(v);
            self(self, v + 1, new_high);
            cur.pop_back();
        }
        if (new_high + 1 <= r_max) {
            cur.push_back(new_high + 1);
            self(self, new_high + 2, new_high + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, used);
}

}  // namespace detail

/// Visit canonical representatives of all assignments of n k-variable
/// factors over at most r_max formal variables (r_max <= 0 means the
/// unconstrained n*k). Visitor returns false to stop early.
inline void enumerate_form_assignments(int n, int k, int r_max,
                                       const std::function<bool(const FormAssignment&)>& visit) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_form_assignments: need n,k >= 1");
    if (r_max <= 0) r_max = n * k;
    if (r_max < k) return;  // a single factor already needs k distinct variables

    FormAssignment fa{n, k, {}};
    bool stop = false;
    auto rec = [&](auto&& self, int used) -> void {
        if (stop) return;
        if (static_cast<int>(fa.factors.size()) == n) {
            if (!visit(fa)) stop = true;
            return;
        }
        std::vector<std::vector<int>> candidates;
        detail::factor_candidates(k, used, r_max,
                                  fa.factors.empty() ? std::vector<int>{} : fa.factors.back(),
                                  candidates);
        for (auto& f : candidates) {
            int new_used = std::max(used, f.back());
            fa.factors.push_back(std::move(f));
            self(self, new_used);
            fa.factors.pop_back();
            if (stop) return;
        }
    };
    rec(rec, 0);
}

/// The merge maneuver: while two variables never share a factor, replace
/// the higher-numbered one by the lower, then compress ids. The merged
/// assignment has every variable pair co-occurring, and its maximum
/// coefficient dominates the original's.
inline FormAssignment merge_disjoint_variables(const FormAssignment& fa) {
    FormAssignment cur = fa;
    for (;;) {
        const int r = cur.variable_count();
        std::vector<std::vector<bool>> together(r + 1, std::vector<bool>(r + 1, false));
        for (const auto& f : cur.factors)
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = a + 1; b < f.size(); ++b)
                    together[f[a]][f[b]] = together[f[b]][f[a]] = true;

        int vi = 0, vj = 0;
        for (int i = 1; i <= r && !vi; ++i)
            for (int j = i + 1; j <= r; ++j)
                if (!together[i][j]) {
                    vi = i;
                    vj = j;
                    break;
                }
        if (!vi) return cur;

        for (auto& f : cur.factors) {
            for (int& v : f) {
                if (v == vj) v = vi;
                else if (v > vj) --v;  // compress: ids above vj shift down
            }
            std::sort(f.begin(), f.end());
        }
        std::sort(cur.factors.begin(), cur.factors.end());
    }
}

/// n!/(ceil(n/k)! * ... * floor(n/k)!): the balanced k-part multinomial.
inline BigInt balanced_multinomial(int n, int k) {
    BigInt out = factorial(static_cast<unsigned long>(n));
    int q = n / k, rem = n % k;
    for (int part = 0; part < k; ++part)
        out /= factorial(static_cast<unsigned long>(part < rem ? q + 1 : q));
    return out;
}

struct CoefficientBoundReport {
    int n = 0;
    int k = 0;
    std::uint64_t assignments_checked = 0;
    BigInt max_observed;
    std::string bound_text;
    bool pass = false;
    bool equality_attained = false;      // k = 2 only: max equals the bound
    bool merge_radius_ok = true;         // k >= 3 only: post-merge r bound held
    std::vector<std::string> maximizers; // assignments attaining max_observed (capped)
};

/// k = 2: every monomial coefficient is at most binom(n, ceil(n/2)), with
/// equality at n identical factors.
inline CoefficientBoundReport check_pair_coefficient_bound(int n, int r_max = 0) {
    CoefficientBoundReport rep;
    rep.n = n;
    rep.k = 2;
    const BigInt bound = binomial(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>((n + 1) / 2));
    rep.bound_text = bound.get_str();
    rep.pass = true;
    enumerate_form_assignments(n, 2, r_max, [&](const FormAssignment& fa) {
        BigInt c = max_monomial_coefficient(fa);
        ++rep.assignments_checked;
        if (c > bound) rep.pass = false;
        if (c > rep.max_observed) {
            rep.max_observed = c;
            rep.maximizers.clear();
        }
        if (c == rep.max_observed && rep.maximizers.size() < 8)
            rep.maximizers.push_back(fa.str());
        return true;
    });
    rep.equality_attained = rep.max_observed == bound;
    return rep;
}

/// C = (3/(2e))^{3/2} as an outward-rounded interval.
inline Interval mass_bound_constant(mpfr_prec_t prec = Interval::kDefaultPrecision) {
    Interval three_halves = Interval::from_ratio(3, 2, prec);
    return exp(three_halves * (log(Interval::from_long(3, prec)) -
                               log(Interval::from_long(2, prec)) - Interval::from_long(1, prec)));
}

/// k >= 3: every monomial coefficient is at most C * k^{n+1} / n^{1/4};
/// additionally, after merging never-co-occurring variables the variable
/// count r satisfies r(r-1) <= nk(k-1), hence r^2 < 2nk^2.
inline CoefficientBoundReport check_kary_coefficient_bound(
    int n, int k, int r_max = 0, mpfr_prec_t prec = Interval::kDefaultPrecision) {
    if (k < 3) throw std::invalid_argument("check_kary_coefficient_bound: need k >= 3");
    CoefficientBoundReport rep;
    rep.n = n;
    rep.k = k;
    Interval bound = mass_bound_constant(prec) *
                     Interval::from_bigint(pow_int(BigInt(k), static_cast<unsigned long>(n + 1)), prec) /
                     sqrt(sqrt(Interval::from_long(n, prec)));
    rep.bound_text = bound.str(12);
    rep.pass = true;
    enumerate_form_assignments(n, k, r_max, [&](const FormAssignment& fa) {
        BigInt c = max_monomial_coefficient(fa);
        ++rep.assignments_checked;
        // conservative: compare against the lower endpoint of the bound
        if (!bound.certainly_at_least_int(c)) rep.pass = false;
        if (c > rep.max_observed) {
            rep.max_observed = c;
            rep.maximizers.clear();
        }
        if (c == rep.max_observed && rep.maximizers.size() < 8)
            rep.maximizers.push_back(fa.str());

        FormAssignment merged = merge_disjoint_variables(fa);
        const long r = merged.variable_count();
        if (!(BigInt(r) * (r - 1) <= BigInt(n) * k * (k - 1)) ||
            !(BigInt(r) * r < BigInt(2) * n * k * k))
            rep.merge_radius_ok = false;
        return true;
    });
    if (!rep.merge_radius_ok) rep.pass = false;
    return rep;
}

struct ConjectureReport {
    int n = 0;
    int k = 0;
    std::uint64_t assignments_checked = 0;
    BigInt balanced_bound;
    BigInt max_observed;
    bool counterexample_found = false;
    std::optional<std::string> counterexample;
};

/// Search for an assignment whose maximum coefficient exceeds the balanced
/// k-multinomial. Not finding one is an inconclusive (and expected) outcome.
inline ConjectureReport check_balanced_multinomial_conjecture(int n, int k, int r_max = 0) {
    if (k < 3) throw std::invalid_argument("check_balanced_multinomial_conjecture: need k >= 3");
    ConjectureReport rep;
    rep.n = n;
    rep.k = k;
    rep.balanced_bound = balanced_multinomial(n, k);
    enumerate_form_assignments(n, k, r_max, [&](const FormAssignment& fa) {
        BigInt c = max_monomial_coefficient(fa);
        ++rep.assignments_checked;
        rep.max_observed = std::max(rep.max_observed, c);
        if (c > rep.balanced_bound && !rep.counterexample_found) {
            rep.counterexample_found = true;
            rep.counterexample = fa.str();
        }
        return true;
    });
    return rep;
}

/// The point (n, a, p) of the mass inequality, with rational p = num/den.
struct BinomialPoint {
    long n = 0;
    long a = 0;
    BigInt p_num;
    BigInt p_den;

    BinomialPoint(long n_, long a_, BigInt num, BigInt den)
        : n(n_), a(a_), p_num(std::move(num)), p_den(std::move(den)) {
        if (a < 1 || a >= n) throw std::invalid_argument("BinomialPoint: need 1 <= a <= n-1");
        if (sgn(p_num) <= 0 || p_num >= p_den)
            throw std::invalid_argument("BinomialPoint: need 0 < p < 1");
    }

    static BinomialPoint peak(long n, long a) {
        return BinomialPoint(n, a, BigInt(2 * a + 1), BigInt(2 * (n + 1)));
    }
};

/// f(n,a,p) = sqrt(n) * binom(n,a) * p^{a+1/2} * (1-p)^{n-a+1/2}, enclosed
/// by outward rounding at the requested precision.
inline Interval scaled_binomial_mass(const BinomialPoint& pt,
                                     mpfr_prec_t prec = Interval::kDefaultPrecision) {
    Interval p = Interval::from_ratio(pt.p_num, pt.p_den, prec);
    Interval q = Interval::from_long(1, prec) - p;
    Interval ea = Interval::from_ratio(BigInt(2 * pt.a + 1), 2, prec);
    Interval eb = Interval::from_ratio(BigInt(2 * (pt.n - pt.a) + 1), 2, prec);
    return sqrt(Interval::from_long(pt.n, prec)) *
           Interval::from_bigint(binomial(static_cast<unsigned long>(pt.n),
                                          static_cast<unsigned long>(pt.a)), prec) *
           pow(p, ea) * pow(q, eb);
}

/// f at the maximizing p = (a+1/2)/(n+1).
inline Interval scaled_binomial_mass_peak(long n, long a,
                                          mpfr_prec_t prec = Interval::kDefaultPrecision) {
    return scaled_binomial_mass(BinomialPoint::peak(n, a), prec);
}

struct MassBoundReport {
    long n_max = 0;
    std::uint64_t points_checked = 0;
    bool peak_below_constant = true;   // f(n,a,p*) < C everywhere
    bool grid_below_constant = true;   // sampled p likewise
    bool grid_dominated_by_peak = true;// no sampled p with f(p) provably above f(p*)
    bool row_one_increasing = true;    // f(2,1) < f(3,1) < ... < f(n_max,1)
    std::string max_peak;              // largest upper endpoint seen, printable
    std::string constant;
    bool pass = false;
};

/// Peak values stay below C for all 1 <= a < n <= n_max; a rational p-grid
/// is swept as a sanity check on the full inequality and on the claim that
/// the peak dominates every p.
inline MassBoundReport check_binomial_mass_bound(long n_max, int grid_density = 8,
                                                 mpfr_prec_t prec = Interval::kDefaultPrecision) {
    MassBoundReport rep;
    rep.n_max = n_max;
    Interval c = mass_bound_constant(prec);
    rep.constant = c.str(12);
    Interval max_peak = Interval::from_long(0, prec);
    Interval prev_row_one = Interval::from_long(0, prec);

    for (long n = 2; n <= n_max; ++n) {
        for (long a = 1; a <= n - 1; ++a) {
            Interval peak = scaled_binomial_mass_peak(n, a, prec);
            ++rep.points_checked;
            if (!peak.certainly_less(c)) rep.peak_below_constant = false;
            if (!peak.certainly_less(max_peak)) max_peak = peak;
            if (a == 1) {
                if (n > 2 && !prev_row_one.certainly_less(peak)) rep.row_one_increasing = false;
                prev_row_one = peak;
            }
            for (int gnum = 1; gnum < grid_density; ++gnum) {
                BinomialPoint pt(n, a, BigInt(gnum), BigInt(grid_density));
                Interval here = scaled_binomial_mass(pt, prec);
                ++rep.points_checked;
                if (!here.certainly_less(c)) rep.grid_below_constant = false;
                if (here.certainly_greater(peak)) rep.grid_dominated_by_peak = false;
            }
        }
    }
    rep.max_peak = max_peak.str(12);
    rep.pass = rep.peak_below_constant && rep.grid_below_constant &&
               rep.grid_dominated_by_peak && rep.row_one_increasing;
    return rep;
}

/// x(a) = log(a+1/2) + a log a - (a+1) log(a+1); strictly decreasing with
/// limit -1. Controls the ratio f(n,a-1)/f(n,a).
inline Interval peak_ratio_log(long a, mpfr_prec_t prec = Interval::kDefaultPrecision) {
    if (a < 1) throw std::invalid_argument("peak_ratio_log: need a >= 1");
    Interval ia = Interval::from_long(a, prec);
    Interval ia1 = Interval::from_long(a + 1, prec);
    return log(Interval::from_ratio(BigInt(2 * a + 1), 2, prec)) + ia * log(ia) - ia1 * log(ia1);
}

/// y(n) = log f(n,1) at the peak; strictly increasing for n > 1 with limit
/// (3/2) log(3/2) - 3/2.
inline Interval log_peak_at_one(long n, mpfr_prec_t prec = Interval::kDefaultPrecision) {
    if (n < 2) throw std::invalid_argument("log_peak_at_one: need n >= 2");
    Interval th = Interval::from_ratio(3, 2, prec);
    Interval half_less = Interval::from_ratio(BigInt(2 * n - 1), 2, prec);   // n - 1/2
    Interval in1 = Interval::from_long(n + 1, prec);
    return th * log(th) + th * log(Interval::from_long(n, prec)) + half_less * log(half_less) -
           in1 * log(in1);
}

inline Interval log_peak_limit(mpfr_prec_t prec = Interval::kDefaultPrecision) {
    Interval th = Interval::from_ratio(3, 2, prec);
    return th * log(th) - th;
}

struct MonotonicityReport {
    long a_max = 0;
    long n_max = 0;
    bool ratio_log_decreasing = true;   // x(1) > x(2) > ...
    bool ratio_log_limit_ok = true;     // x(10^6) within 1e-5 of -1
    bool peak_log_increasing = true;    // y(2) < y(3) < ...
    bool peak_log_below_limit = true;   // y(n) < (3/2)log(3/2) - 3/2
    bool pass = false;
};

inline MonotonicityReport check_mass_peak_monotonicity(
    long a_max, long n_max, mpfr_prec_t prec = Interval::kDefaultPrecision) {
    MonotonicityReport rep;
    rep.a_max = a_max;
    rep.n_max = n_max;

    Interval prev = peak_ratio_log(1, prec);
    for (long a = 2; a <= a_max; ++a) {
        Interval cur = peak_ratio_log(a, prec);
        if (!cur.certainly_less(prev)) rep.ratio_log_decreasing = false;
        prev = cur;
    }
    Interval tail = peak_ratio_log(1'000'000, prec) + Interval::from_long(1, prec);
    Interval tol = Interval::from_ratio(1, 100'000, prec);
    if (!(tail.certainly_less(tol) && (-tail).certainly_less(tol))) rep.ratio_log_limit_ok = false;

    Interval limit = log_peak_limit(prec);
    Interval prev_y = log_peak_at_one(2, prec);
    if (!prev_y.certainly_less(limit)) rep.peak_log_below_limit = false;
    for (long n = 3; n <= n_max; ++n) {
        Interval cur = log_peak_at_one(n, prec);
        if (!prev_y.certainly_less(cur)) rep.peak_log_increasing = false;
        if (!cur.certainly_less(limit)) rep.peak_log_below_limit = false;
        prev_y = cur;
    }
    rep.pass = rep.ratio_log_decreasing && rep.ratio_log_limit_ok && rep.peak_log_increasing &&
               rep.peak_log_below_limit;
    return rep;
}

}  // namespace rookdist
