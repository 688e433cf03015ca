#pragma once

// The full validation suite: eight numbered criteria, each with its
// tolerances and budgets pinned here. Used by both the acceptance test
// binary and the `validate` CLI subcommand.

#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rookdist/bounds.hpp"
#include "rookdist/common.hpp"
#include "rookdist/constructor.hpp"
#include "rookdist/corpus.hpp"
#include "rookdist/exact_dist.hpp"
#include "rookdist/grid.hpp"
#include "rookdist/nullstellensatz.hpp"
#include "rookdist/oracle.hpp"

namespace rookdist {

struct CriterionOutcome {
    int id = 0;
    std::string name;
    enum class Status { pass, fail, refused } status = Status::fail;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationOptions {
    std::vector<int> criteria = {1, 2, 3, 4, 5, 6, 7, 8};
    std::uint64_t budget_scale = 1;  // 0 refuses every search-backed criterion
    std::uint64_t seed = 1;
};

namespace detail {

template <typename F>
CriterionOutcome timed(int id, const std::string& name, std::uint64_t budget_scale, F&& body) {
    CriterionOutcome out;
    out.id = id;
    out.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (budget_scale == 0) throw BudgetExceeded("zero budget");
        std::ostringstream detail;
        bool ok = body(detail);
        out.status = ok ? CriterionOutcome::Status::pass : CriterionOutcome::Status::fail;
        out.detail = detail.str();
    } catch (const BudgetExceeded& e) {
        out.status = CriterionOutcome::Status::refused;
        out.detail = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace detail

/// 1. Closed form agrees with the exhaustive oracle for every grid with
/// 1 <= n < m <= 6, borderline cases included. Exact equality.
inline CriterionOutcome criterion_formula_vs_oracle(std::uint64_t budget_scale) {
    return detail::timed(1, "closed-form value equals exhaustive minimum for n < m <= 6",
                         budget_scale, [&](std::ostringstream& detail) {
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            for (int m = n + 1; m <= 6; ++m) {
                DistNumberResult formula = distinguishing_number(n, BigInt(m));
                MinDistResult searched = min_distinguishing_number(GridSpec(n, m));
                bool agree = formula.value == searched.value;
                ok = ok && agree;
                detail << "(" << n << "," << m << "): formula " << formula.value
                       << (formula.borderline ? "*" : "") << " oracle " << searched.value
                       << (agree ? "" : "  MISMATCH") << "; ";
            }
        }
        return ok;
    });
}

/// 2. The off-diagonal coefficient computed by full symbolic expansion
/// equals prod r! for n = 1..4 (1, 2, 12, 288). Exact integers.
inline CriterionOutcome criterion_coefficient_identity(std::uint64_t budget_scale) {
    return detail::timed(2, "expanded off-diagonal coefficient equals factorial product, n <= 4",
                         budget_scale, [&](std::ostringstream& detail) {
        const BigInt expected[] = {BigInt(1), BigInt(2), BigInt(12), BigInt(288)};
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            BigInt expanded = off_diagonal_coefficient(n);
            BigInt closed = factorial_product(n);
            bool agree = expanded == closed && closed == expected[n - 1];
            ok = ok && agree;
            detail << "n=" << n << ": " << expanded.get_str() << (agree ? "" : " MISMATCH") << "; ";
        }
        return ok;
    });
}

/// 3. The polynomial-backed solver succeeds and is oracle-certified on 1000
/// seeded random two-list instances for each n in {2,3,4}. Zero failures.
inline CriterionOutcome criterion_two_list_solver(std::uint64_t budget_scale, std::uint64_t seed) {
    return detail::timed(3, "two-list coloring always found and certified on n+1 columns",
                         budget_scale, [&](std::ostringstream& detail) {
        constexpr int kTrials = 1000;
        constexpr int kUniverse = 5;
        bool ok = true;
        for (int n = 2; n <= 4; ++n) {
            SplitMix64 rng(seed + n);
            int good = 0;
            for (int t = 0; t < kTrials; ++t) {
                GridSpec g(n, n + 1);
                ListAssignment L = random_list_assignment(g, 2, kUniverse, rng);
                Coloring c = nullstellensatz_coloring(L);
                if (L.admits(c) && sgn(evaluate_form(c)) != 0 && is_distinguishing(c).verdict)
                    ++good;
            }
            ok = ok && good == kTrials;
            detail << "n=" << n << ": " << good << "/" << kTrials << "; ";
        }
        return ok;
    });
}

/// 4. Pair-sum coefficient bound, exhaustive over relabeling classes for
/// n <= 6: max coefficient <= binom(n, ceil(n/2)), equality attained.
inline CriterionOutcome criterion_pair_bound(std::uint64_t budget_scale) {
    return detail::timed(4, "pair-sum coefficients bounded by the central binomial, n <= 6",
                         budget_scale, [&](std::ostringstream& detail) {
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            auto rep = check_pair_coefficient_bound(n);
            bool good = rep.pass && rep.equality_attained;
            ok = ok && good;
            detail << "n=" << n << ": max " << rep.max_observed.get_str() << " bound "
                   << rep.bound_text << " over " << rep.assignments_checked << " classes"
                   << (good ? "" : " FAIL") << "; ";
        }
        return ok;
    });
}

/// 5. k = 3 coefficient bound C k^{n+1} / n^{1/4} for n <= 5 via conservative
/// interval comparison, plus the post-merge variable-count bound r^2 < 2nk^2.
inline CriterionOutcome criterion_kary_bound(std::uint64_t budget_scale) {
    return detail::timed(5, "triple-sum coefficients bounded by C*k^(n+1)/n^(1/4), n <= 5",
                         budget_scale, [&](std::ostringstream& detail) {
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            auto rep = check_kary_coefficient_bound(n, 3);
            bool good = rep.pass && rep.merge_radius_ok;
            ok = ok && good;
            detail << "n=" << n << ": max " << rep.max_observed.get_str() << " bound "
                   << rep.bound_text << " over " << rep.assignments_checked << " classes"
                   << (good ? "" : " FAIL") << "; ";
        }
        return ok;
    });
}

/// 6. Scaled binomial mass at the peak stays below 0.409917 for all
/// 1 <= a < n <= 500; the two anchor values are reproduced to ten
/// significant digits; f(n,1) is strictly increasing and lands within
/// 10^-2 of the limit constant at n = 500.
inline CriterionOutcome criterion_mass_inequality(std::uint64_t budget_scale) {
    return detail::timed(6, "binomial mass peak < 0.409917 up to n = 500, anchors reproduced",
                         budget_scale, [&](std::ostringstream& detail) {
        const mpfr_prec_t prec = 192;
        Interval threshold = Interval::from_ratio(409917, 1'000'000, prec);
        bool peaks_ok = true;
        bool increasing = true;
        Interval prev_row_one = Interval::from_long(0, prec);
        Interval row_one_at_500(prec);
        for (long n = 2; n <= 500; ++n) {
            for (long a = 1; a < n; ++a) {
                Interval peak = scaled_binomial_mass_peak(n, a, prec);
                if (!peak.certainly_less(threshold)) peaks_ok = false;
                if (a == 1) {
                    if (n > 2 && !prev_row_one.certainly_less(peak)) increasing = false;
                    prev_row_one = peak;
                    if (n == 500) row_one_at_500 = peak;
                }
            }
        }

        auto within_relative = [&](const Interval& value, const Interval& exact, long denom) {
            Interval diff = value - exact;
            Interval tol = exact * Interval::from_ratio(1, denom, prec);
            return diff.certainly_less(tol) && (-diff).certainly_less(tol);
        };
        Interval f21 = scaled_binomial_mass_peak(2, 1, prec);
        Interval exact21 = sqrt(Interval::from_long(2, prec)) / Interval::from_long(4, prec);
        bool anchor2 = within_relative(f21, exact21, 10'000'000'000L) &&
                       f21.certainly_less(Interval::from_ratio(35356, 100'000, prec));
        Interval f31 = scaled_binomial_mass_peak(3, 1, prec);
        Interval exact31 = Interval::from_ratio(675, 4096, prec) * sqrt(Interval::from_long(5, prec));
        Interval f32 = scaled_binomial_mass_peak(3, 2, prec);
        bool anchor3 = within_relative(f31, exact31, 10'000'000'000L) &&
                       within_relative(f32, exact31, 10'000'000'000L) &&
                       f31.certainly_less(Interval::from_ratio(36850, 100'000, prec));

        Interval gap = mass_bound_constant(prec) - row_one_at_500;
        bool near_limit = gap.certainly_positive() &&
                          gap.certainly_less(Interval::from_ratio(1, 100, prec));

        detail << "peaks<0.409917: " << (peaks_ok ? "yes" : "NO")
               << "; anchors: " << (anchor2 && anchor3 ? "ok" : "FAIL")
               << "; f(n,1) increasing: " << (increasing ? "yes" : "NO")
               << "; C - f(500,1) in (0, 0.01): " << (near_limit ? "yes" : "NO")
               << "; f(500,1) = " << row_one_at_500.str(10);
        return peaks_ok && anchor2 && anchor3 && increasing && near_limit;
    });
}

/// 7. Structured and naive distinguishing verifiers agree on 10,000 seeded
/// random colorings over grids with n! * m! <= 10^6.
inline CriterionOutcome criterion_oracle_agreement(std::uint64_t budget_scale, std::uint64_t seed) {
    return detail::timed(7, "structured and naive verifiers agree on 10000 random colorings",
                         budget_scale, [&](std::ostringstream& detail) {
        constexpr std::uint64_t kPairBudget = 1'000'000;
        std::vector<GridSpec> pool;
        for (int n = 1; n <= 6; ++n)
            for (int m = n + 1; m <= 9; ++m)
                if (factorial(n) * factorial(m) <= BigInt(kPairBudget)) pool.emplace_back(n, m);

        SplitMix64 rng(seed);
        int agreements = 0;
        int positives = 0;
        constexpr int kTrials = 10'000;
        for (int t = 0; t < kTrials; ++t) {
            const GridSpec g = pool[rng.below(pool.size())];
            int colors = 2 + static_cast<int>(rng.below(3));
            Coloring c = random_coloring(g, colors, rng);
            DistinguishingCertificate fast = is_distinguishing(c);
            DistinguishingCertificate slow = naive_is_distinguishing(c, kPairBudget);
            if (fast.verdict == slow.verdict) ++agreements;
            if (fast.verdict) ++positives;
        }
        detail << agreements << "/" << kTrials << " agree (" << positives << " distinguishing)";
        return agreements == kTrials;
    });
}

/// 8. Constructive solver verdict matches the exhaustive search on 500
/// seeded instances spanning all three anchor strategies; every success is
/// oracle-certified and list-admissible.
inline CriterionOutcome criterion_solver_agreement(std::uint64_t budget_scale, std::uint64_t seed) {
    return detail::timed(8, "constructive solve matches exhaustive verdict on 500 instances",
                         budget_scale, [&](std::ostringstream& detail) {
        struct Shape {
            int n, m, list_size, universe;
            ListStratum stratum;
        };
        const std::vector<Shape> shapes = {
            {2, 3, 2, 5, ListStratum::free_columns},
            {2, 3, 2, 4, ListStratum::no_uniform_columns},
            {2, 4, 2, 5, ListStratum::uniform_columns},
            {2, 4, 2, 2, ListStratum::free_columns},
            {2, 4, 3, 5, ListStratum::mixed_columns},
            {2, 5, 2, 6, ListStratum::mixed_columns},
            {3, 4, 2, 5, ListStratum::free_columns},
            {3, 4, 1, 4, ListStratum::free_columns},
            {1, 3, 2, 4, ListStratum::free_columns},
            {1, 2, 1, 2, ListStratum::free_columns},
        };
        constexpr int kTrials = 500;
        SplitMix64 rng(seed);
        std::set<AnchorStrategy> seen;
        int agree = 0;
        for (int t = 0; t < kTrials; ++t) {
            const Shape& s = shapes[t % shapes.size()];
            ListAssignment L =
                random_list_assignment(GridSpec(s.n, s.m), s.list_size, s.universe, rng, s.stratum);
            SolveResult res = solve(L);
            seen.insert(res.strategy);
            auto exhaustive = list_distinguishing_exhaustive(L);
            bool match = (res.status == SolveStatus::found) == exhaustive.has_value();
            if (res.status == SolveStatus::found)
                match = match && L.admits(*res.coloring) && is_distinguishing(*res.coloring).verdict;
            if (res.status == SolveStatus::refused) match = false;
            if (match) ++agree;
        }
        bool all_strategies = seen.size() == 3;
        detail << agree << "/" << kTrials << " agree; strategies seen: " << seen.size() << "/3";
        return agree == kTrials && all_strategies;
    });
}

inline std::vector<CriterionOutcome> run_full_validation(const ValidationOptions& opts = {}) {
    std::vector<CriterionOutcome> out;
    for (int id : opts.criteria) {
        switch (id) {
            case 1: out.push_back(criterion_formula_vs_oracle(opts.budget_scale)); break;
            case 2: out.push_back(criterion_coefficient_identity(opts.budget_scale)); break;
            case 3: out.push_back(criterion_two_list_solver(opts.budget_scale, opts.seed)); break;
            case 4: out.push_back(criterion_pair_bound(opts.budget_scale)); break;
            case 5: out.push_back(criterion_kary_bound(opts.budget_scale)); break;
            case 6: out.push_back(criterion_mass_inequality(opts.budget_scale)); break;
            case 7: out.push_back(criterion_oracle_agreement(opts.budget_scale, opts.seed)); break;
            case 8: out.push_back(criterion_solver_agreement(opts.budget_scale, opts.seed)); break;
            default: throw std::invalid_argument("unknown criterion id");
        }
    }
    return out;
}

/// Criteria grouped by the module they exercise, for the CLI module filter.
inline std::vector<int> criteria_for_module(const std::string& module) {
    if (module == "exact_dist") return {1};
    if (module == "polynomial") return {2, 3};
    if (module == "bounds") return {4, 5, 6};
    if (module == "oracle") return {7};
    if (module == "constructor") return {8};
    throw std::invalid_argument("unknown module: " + module);
}

}  // namespace rookdist
