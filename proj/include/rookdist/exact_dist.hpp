#pragma once

// Closed-form distinguishing number of K_n [] K_m. With k the unique base
// satisfying (k-1)^n < m <= k^n, the answer is k or k+1 according to which
// side of m* = k^n - ceil(log_k n) the column count falls on; exactly at m*
// the answer is settled here by an exact search for a distinguishing
// k-coloring. All threshold arithmetic is arbitrary-precision integer; no
// floating-point powers or logarithms anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rookdist/common.hpp"
#include "rookdist/grid.hpp"
#include "rookdist/oracle.hpp"

namespace rookdist {

/// The unique k >= 2 with (k-1)^n < m <= k^n. Needs n >= 1, m >= 2.
inline int band(int n, const BigInt& m) {
    if (n < 1 || m < 2) throw std::invalid_argument("band: need n >= 1, m >= 2");
    BigInt k;
    mpz_root(k.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
    // floor(m^(1/n)) never overshoots, so walk up to the least k with k^n >= m;
    // minimality gives (k-1)^n < m, and m >= 2 gives k >= 2.
    while (pow_int(k, static_cast<unsigned long>(n)) < m) ++k;
    if (!k.fits_sint_p()) throw std::invalid_argument("band: value exceeds int range");
    return static_cast<int>(k.get_si());
}

/// Smallest t >= 0 with k^t >= n, i.e. ceil(log_k n), by integer comparison.
inline int ceil_log_int(int k, int n) {
    if (k < 2 || n < 1) throw std::invalid_argument("ceil_log_int: need k >= 2, n >= 1");
    int t = 0;
    BigInt power = 1;
    while (power < n) {
        power *= k;
        ++t;
    }
    return t;
}

struct DistNumberResult {
    int k_band = 0;
    int value = 0;
    bool borderline = false;
    enum class Resolution { formula, search } resolution = Resolution::formula;
};

/// Thrown when m sits exactly on the borderline and the deciding search ran
/// out of budget; carries both remaining candidates.
struct BorderlineIndeterminate : BudgetExceeded {
    int lower;
    int upper;
    BorderlineIndeterminate(int lo, int hi)
        : BudgetExceeded("distinguishing_number: borderline search budget exceeded; value is " +
                         std::to_string(lo) + " or " + std::to_string(hi)),
          lower(lo), upper(hi) {}
};

inline DistNumberResult distinguishing_number(int n, const BigInt& m,
                                              std::uint64_t search_budget = 50'000'000ull) {
    if (n < 1 || m <= n) throw std::invalid_argument("distinguishing_number: need 1 <= n < m");
    const int k = band(n, m);
    const BigInt threshold = pow_int(BigInt(k), n) - ceil_log_int(k, n);

    if (m <= threshold - 1)
        return {k, k, false, DistNumberResult::Resolution::formula};
    if (m >= threshold + 1)
        return {k, k + 1, false, DistNumberResult::Resolution::formula};

    // m == k^n - ceil(log_k n): decide by searching for a distinguishing
    // k-coloring; success means k, verified exhaustion means k+1.
    if (!m.fits_sint_p()) throw BorderlineIndeterminate(k, k + 1);
    GridSpec g(n, static_cast<int>(m.get_si()));
    std::uint64_t nodes = search_budget;
    try {
        if (exists_distinguishing_coloring(g, k, nodes))
            return {k, k, true, DistNumberResult::Resolution::search};
        return {k, k + 1, true, DistNumberResult::Resolution::search};
    } catch (const BudgetExceeded&) {
        throw BorderlineIndeterminate(k, k + 1);
    }
}

}  // namespace rookdist
