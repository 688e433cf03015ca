#pragma once

// Ground-truth engines for the distinguishing property on K_n [] K_m.
//
// A coloring is distinguishing when the only color-preserving automorphism
// is the identity. The structured verifier searches row permutations only
// and matches columns by multiset; the naive verifier enumerates the full
// automorphism group and exists to cross-validate the structured one.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rookdist/common.hpp"
#include "rookdist/grid.hpp"

namespace rookdist {

/// verdict false carries a witness: a nontrivial automorphism fixing the
/// coloring. Both facts are re-checked before every return.
struct DistinguishingCertificate {
    bool verdict = false;
    std::optional<Automorphism> witness;
};

namespace detail {

inline DistinguishingCertificate checked_negative(const Coloring& c, Automorphism w) {
    if (w.is_identity() || apply_automorphism(w, c) != c)
        throw std::logic_error("oracle: produced an invalid witness");
    return {false, std::move(w)};
}

/// sigma acting on a column vector: out[i] = v[sigma^-1(i)].
inline ColorVector permute_vector(const Permutation& sigma_inv, const ColorVector& v) {
    ColorVector out(v.size());
    for (int i = 1; i <= static_cast<int>(v.size()); ++i) out[i - 1] = v[sigma_inv.of(i) - 1];
    return out;
}

}  // namespace detail

/// Structured verifier. For each row permutation sigma, a color-preserving
/// column permutation exists iff the multiset of sigma-permuted column
/// vectors equals the multiset of original column vectors; for sigma = id
/// this degenerates to a duplicate-column scan. Runs in
/// O(n! * m * (n + log m)) rather than O(n! * m!).
inline DistinguishingCertificate is_distinguishing(const Coloring& c) {
    const int n = c.grid().n;
    const int m = c.grid().m;

    std::vector<ColorVector> vecs(m);
    for (int j = 1; j <= m; ++j) vecs[j - 1] = column_vector(c, j);

    // sigma = id: a nontrivial tau exists iff two columns coincide. Report
    // the lowest-indexed duplicate pair as the witness.
    {
        std::map<ColorVector, int> first_seen;
        for (int j = 1; j <= m; ++j) {
            auto [it, inserted] = first_seen.try_emplace(vecs[j - 1], j);
            if (!inserted) {
                Automorphism w{Permutation::identity(n),
                               Permutation::transposition(m, it->second, j)};
                return detail::checked_negative(c, std::move(w));
            }
        }
    }

    std::vector<ColorVector> sorted_vecs = vecs;
    std::sort(sorted_vecs.begin(), sorted_vecs.end());

    // Columns grouped by vector, indices ascending, for witness construction.
    std::map<ColorVector, std::vector<int>> by_vector;
    for (int j = 1; j <= m; ++j) by_vector[vecs[j - 1]].push_back(j);

    Permutation sigma = Permutation::identity(n);
    while (sigma.next()) {  // lexicographic order, identity already handled
        Permutation sigma_inv = sigma.inverse();
        std::vector<ColorVector> permuted(m);
        for (int j = 0; j < m; ++j) permuted[j] = detail::permute_vector(sigma_inv, vecs[j]);

        std::vector<ColorVector> sorted_permuted = permuted;
        std::sort(sorted_permuted.begin(), sorted_permuted.end());
        if (sorted_permuted != sorted_vecs) continue;

        // A color-preserving pair exists: column tau(j) must carry the
        // sigma-permuted vector of column j. Match duplicates in index order.
        std::map<ColorVector, std::size_t> cursor;
        std::vector<int> tau_image(m);
        for (int j = 0; j < m; ++j) {
            auto& pool = by_vector.at(permuted[j]);
            tau_image[j] = pool[cursor[permuted[j]]++];
        }
        Automorphism w{sigma, Permutation(std::move(tau_image))};
        return detail::checked_negative(c, std::move(w));
    }
    return {true, std::nullopt};
}

/// Full enumeration of all (sigma, tau) pairs. Refuses when n! * m! exceeds
/// the budget; a silently truncated oracle would be worse than none.
inline DistinguishingCertificate naive_is_distinguishing(
    const Coloring& c, std::uint64_t budget = 100'000'000ull) {
    const int n = c.grid().n;
    const int m = c.grid().m;
    if (factorial(n) * factorial(m) > BigInt(budget))
        throw BudgetExceeded("naive_is_distinguishing: n! * m! exceeds budget");

    Permutation sigma = Permutation::identity(n);
    do {
        Permutation sinv = sigma.inverse();
        Permutation tau = Permutation::identity(m);
        do {
            if (sigma.is_identity() && tau.is_identity()) continue;
            Permutation tinv = tau.inverse();
            bool fixed = true;
            for (int i = 1; fixed && i <= n; ++i) {
                const int si = sinv.of(i);
                for (int j = 1; j <= m; ++j) {
                    if (c.at(i, j) != c.at(si, tinv.of(j))) {
                        fixed = false;
                        break;
                    }
                }
            }
            if (fixed) return detail::checked_negative(c, Automorphism{sigma, tau});
        } while (tau.next());
    } while (sigma.next());
    return {true, std::nullopt};
}

namespace detail {

// Canonical-form search for a distinguishing coloring with at most k colors.
//
// Both color relabeling and applying a grid automorphism preserve the
// distinguishing property, so it suffices to enumerate colorings that are
// (a) labeled 0,1,2,... in first-occurrence order reading column-major and
// (b) have strictly increasing column vectors (any distinguishing coloring
// has pairwise distinct columns). The column-major-least member of each
// orbit satisfies both, so the restriction loses no orbit.
struct CanonicalColoringSearch {
    const GridSpec grid;
    const int max_colors;
    const bool forbid_monochromatic;
    std::uint64_t& nodes_left;

    std::vector<Color> column;                // current column, top to bottom
    std::vector<ColorVector> chosen;          // completed columns
    int colors_used = 0;
    std::optional<Coloring> found;

    CanonicalColoringSearch(GridSpec g, int k, bool no_mono, std::uint64_t& budget)
        : grid(g), max_colors(k), forbid_monochromatic(no_mono), nodes_left(budget),
          column(g.n) {}

    bool run() {
        next_column();
        return found.has_value();
    }

    void next_column() {
        if (found) return;
        if (static_cast<int>(chosen.size()) == grid.m) {
            std::vector<Color> cells(grid.cells());
            for (int j = 0; j < grid.m; ++j)
                for (int i = 0; i < grid.n; ++i) cells[i * grid.m + j] = chosen[j][i];
            Coloring candidate(grid, std::move(cells));
            if (is_distinguishing(candidate).verdict) found = std::move(candidate);
            return;
        }
        fill_cell(0, colors_used);
    }

    void fill_cell(int row, int used_before_column) {
        if (found) return;
        if (row == grid.n) {
            if (!chosen.empty() && column <= chosen.back()) return;
            if (forbid_monochromatic &&
                std::all_of(column.begin(), column.end(),
                            [&](Color x) { return x == column.front(); }))
                return;
            chosen.push_back(column);
            const int saved = colors_used;
            colors_used = std::max(colors_used,
                                   *std::max_element(column.begin(), column.end()) + 1);
            next_column();
            colors_used = saved;
            chosen.pop_back();
            return;
        }
        int limit = std::min(max_colors - 1, std::max(colors_used, partial_max(row)));
        for (Color x = 0; x <= limit; ++x) {
            if (nodes_left == 0) throw BudgetExceeded("coloring search budget exhausted");
            --nodes_left;
            column[row] = x;
            fill_cell(row + 1, used_before_column);
            if (found) return;
        }
    }

    // Largest color usable at this cell under first-occurrence labeling:
    // one past the maximum seen so far (column-major reading order).
    int partial_max(int row) const {
        int mx = colors_used - 1;
        for (int r = 0; r < row; ++r) mx = std::max(mx, column[r]);
        return mx + 1;
    }
};

}  // namespace detail

/// Search for any distinguishing coloring of g with at most k colors,
/// up to color relabeling and column reordering. Deterministic: returns the
/// first hit in canonical enumeration order.
inline std::optional<Coloring> exists_distinguishing_coloring(
    GridSpec g, int k, std::uint64_t& node_budget, bool forbid_monochromatic = false) {
    if (k < 1) return std::nullopt;
    detail::CanonicalColoringSearch search(g, k, forbid_monochromatic, node_budget);
    search.run();
    return search.found;
}

struct MinDistResult {
    int value = 0;
    Coloring witness;
};

/// Least k admitting a distinguishing k-coloring, with a witness. The grid
/// with all cells distinct is always distinguishing, so the scan terminates.
inline MinDistResult min_distinguishing_number(GridSpec g,
                                               std::uint64_t node_budget = 50'000'000ull) {
    for (int k = 1; k <= g.cells(); ++k) {
        if (auto witness = exists_distinguishing_coloring(g, k, node_budget))
            return {k, std::move(*witness)};
    }
    throw std::logic_error("min_distinguishing_number: exhausted color range");
}

/// Exhaustively search the list assignment space for a distinguishing
/// L-coloring, in lexicographic (row-major odometer) order. nullopt is a
/// verified nonexistence verdict; an over-budget space raises a refusal.
inline std::optional<Coloring> list_distinguishing_exhaustive(
    const ListAssignment& L, const BigInt& budget = BigInt(1'000'000)) {
    if (L.assignment_count() > budget)
        throw BudgetExceeded("list_distinguishing_exhaustive: assignment space exceeds budget");

    const auto& lists = L.lists();
    const std::size_t cells = lists.size();
    std::vector<std::size_t> pick(cells, 0);
    std::vector<Color> current(cells);
    for (std::size_t p = 0; p < cells; ++p) current[p] = lists[p][0];

    while (true) {
        Coloring candidate(L.grid(), current);
        if (is_distinguishing(candidate).verdict) return candidate;

        // odometer: last cell varies fastest
        std::size_t p = cells;
        while (p > 0) {
            --p;
            if (++pick[p] < lists[p].size()) {
                current[p] = lists[p][pick[p]];
                break;
            }
            pick[p] = 0;
            current[p] = lists[p][0];
            if (p == 0) return std::nullopt;
        }
    }
}

}  // namespace rookdist
