#pragma once

// The polynomial route to list colorings of K_n [] K_{n+1}.
//
// One variable per cell. The column part multiplies the differences of
// column sums (nonzero iff all column sums are pairwise distinct, which
// forces pairwise distinct column multisets); the row part multiplies
// x_{l,h} - x_{h,h} for h < l (nonzero iff column h separates row h from
// every later row). A nonzero value of the product certifies that the cell
// values, read as colors, form a distinguishing coloring. The coefficient
// of the all-off-diagonal monomial equals prod_{r<=n} r!, which is nonzero,
// so the Combinatorial Nullstellensatz guarantees a nonzero valuation from
// any two-element lists.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rookdist/common.hpp"
#include "rookdist/grid.hpp"
#include "rookdist/polynomial.hpp"

namespace rookdist {

/// Variable layout for the cell polynomial on an n-by-(n+1) grid.
struct FormLayout {
    int n;

    explicit FormLayout(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("FormLayout: need n >= 1");
    }

    int columns() const { return n + 1; }
    int slots() const { return n * (n + 1); }
    /// 1-based row i in [1,n], column j in [1,n+1].
    int slot(int i, int j) const { return (i - 1) * (n + 1) + (j - 1); }
    /// deg = C(n+1,2) + C(n,2) = n^2, by factor bookkeeping.
    int column_part_degree() const { return n * (n + 1) / 2; }
    int row_part_degree() const { return n * (n - 1) / 2; }
    int degree() const { return column_part_degree() + row_part_degree(); }

    /// Exponent 1 on every off-diagonal cell, 0 on the diagonal.
    Monomial off_diagonal_monomial() const {
        Monomial m(slots(), 0);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= columns(); ++j)
                if (i != j) m[slot(i, j)] = 1;
        return m;
    }
};

constexpr std::size_t kDefaultTermBudget = 8'000'000;

/// Fully expanded product of column-sum differences,
/// prod_{1<=i<j<=n+1} (sum_k x_{k,j} - sum_k x_{k,i}).
inline SparsePoly column_separation_product(int n,
                                            std::size_t term_budget = kDefaultTermBudget) {
    FormLayout layout(n);
    SparsePoly acc = SparsePoly::constant(layout.slots(), 1);
    for (int i = 1; i <= layout.columns(); ++i) {
        for (int j = i + 1; j <= layout.columns(); ++j) {
            SparsePoly factor(layout.slots());
            for (int k = 1; k <= n; ++k) {
                factor.add_term([&] {
                    Monomial m(layout.slots(), 0);
                    m[layout.slot(k, j)] = 1;
                    return m;
                }(), 1);
                factor.add_term([&] {
                    Monomial m(layout.slots(), 0);
                    m[layout.slot(k, i)] = 1;
                    return m;
                }(), -1);
            }
            acc = poly_mul(acc, factor, term_budget);
        }
    }
    return acc;
}

/// Fully expanded product of row separators, prod_{1<=h<l<=n} (x_{l,h} - x_{h,h}).
/// Empty product (the constant 1) when n = 1.
inline SparsePoly row_separation_product(int n,
                                         std::size_t term_budget = kDefaultTermBudget) {
    FormLayout layout(n);
    SparsePoly acc = SparsePoly::constant(layout.slots(), 1);
    for (int h = 1; h <= n; ++h) {
        for (int l = h + 1; l <= n; ++l) {
            SparsePoly factor(layout.slots());
            Monomial below(layout.slots(), 0);
            below[layout.slot(l, h)] = 1;
            factor.add_term(std::move(below), 1);
            Monomial diag(layout.slots(), 0);
            diag[layout.slot(h, h)] = 1;
            factor.add_term(std::move(diag), -1);
            acc = poly_mul(acc, factor, term_budget);
        }
    }
    return acc;
}

/// Coefficient of prod_{i != j} x_{i,j} in the full form, computed from the
/// fully expanded column and row parts. Must equal factorial_product(n).
inline BigInt off_diagonal_coefficient(int n, std::size_t term_budget = kDefaultTermBudget) {
    FormLayout layout(n);
    SparsePoly col = column_separation_product(n, term_budget);
    SparsePoly row = row_separation_product(n, term_budget);
    return product_coefficient(col, row, layout.off_diagonal_monomial());
}

/// prod_{r=1}^{n} r!.
inline BigInt factorial_product(int n) {
    BigInt out = 1;
    for (int r = 1; r <= n; ++r) out *= factorial(static_cast<unsigned long>(r));
    return out;
}

/// Exact value of the form at an integer point, via the factored shape
/// (never through expansion). values is indexed by FormLayout::slot.
inline BigInt evaluate_form(int n, const std::vector<long>& values) {
    FormLayout layout(n);
    if (values.size() != static_cast<std::size_t>(layout.slots()))
        throw std::invalid_argument("evaluate_form: wrong number of values");

    std::vector<BigInt> column_sums(layout.columns(), 0);
    for (int j = 1; j <= layout.columns(); ++j)
        for (int i = 1; i <= n; ++i) column_sums[j - 1] += values[layout.slot(i, j)];

    BigInt out = 1;
    for (int i = 1; i <= layout.columns(); ++i)
        for (int j = i + 1; j <= layout.columns(); ++j)
            out *= column_sums[j - 1] - column_sums[i - 1];
    for (int h = 1; h <= n; ++h)
        for (int l = h + 1; l <= n; ++l)
            out *= BigInt(values[layout.slot(l, h)]) - BigInt(values[layout.slot(h, h)]);
    return out;
}

inline BigInt evaluate_form(const Coloring& c) {
    if (c.grid().m != c.grid().n + 1)
        throw std::invalid_argument("evaluate_form: grid must be n by n+1");
    FormLayout layout(c.grid().n);
    std::vector<long> values(layout.slots());
    for (int i = 1; i <= c.grid().n; ++i)
        for (int j = 1; j <= c.grid().m; ++j) values[layout.slot(i, j)] = c.at(i, j);
    return evaluate_form(c.grid().n, values);
}

/// A distinguishing L-coloring of K_n [] K_{n+1} from lists of size >= 2.
///
/// Lists are truncated to their two smallest colors; the Nullstellensatz
/// with the off-diagonal target monomial (all exponents <= 1, coefficient
/// prod r! != 0) guarantees some choice gives a nonzero form value, so the
/// search cannot exhaust. Row-separator cells are assigned first with eager
/// pruning; column-sum distinctness is pruned as each column completes.
inline Coloring nullstellensatz_coloring(const ListAssignment& L) {
    const GridSpec g = L.grid();
    const int n = g.n;
    if (g.m != n + 1)
        throw std::invalid_argument("nullstellensatz_coloring: grid must be n by n+1");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= g.m; ++j)
            if (L.at(i, j).size() < 2)
                throw std::invalid_argument("nullstellensatz_coloring: every list needs size >= 2");

    // Cell order: for each h < n the diagonal (h,h) then the cells below it
    // (the row-separator pairs), then everything else column-major.
    std::vector<std::pair<int, int>> order;
    std::vector<std::vector<bool>> placed(n + 1, std::vector<bool>(g.m + 1, false));
    for (int h = 1; h <= n - 1; ++h) {
        order.emplace_back(h, h);
        placed[h][h] = true;
        for (int l = h + 1; l <= n; ++l) {
            order.emplace_back(l, h);
            placed[l][h] = true;
        }
    }
    for (int j = 1; j <= g.m; ++j)
        for (int i = 1; i <= n; ++i)
            if (!placed[i][j]) order.emplace_back(i, j);

    std::vector<int> remaining_in_column(g.m + 1, n);
    std::vector<long> column_sum(g.m + 1, 0);
    std::vector<std::vector<Color>> chosen(n + 1, std::vector<Color>(g.m + 1, 0));
    std::vector<bool> column_done(g.m + 1, false);

    auto truncated = [&](int i, int j) {
        const auto& list = L.at(i, j);
        return std::pair<Color, Color>(list[0], list[1]);
    };

    std::optional<Coloring> result;

    auto assign = [&](auto&& self, std::size_t pos) -> void {
        if (result) return;
        if (pos == order.size()) {
            std::vector<Color> cells(g.cells());
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= g.m; ++j) cells[(i - 1) * g.m + (j - 1)] = chosen[i][j];
            result = Coloring(g, std::move(cells));
            return;
        }
        auto [i, j] = order[pos];
        auto [lo, hi] = truncated(i, j);
        for (Color value : {lo, hi}) {
            if (i > j && value == chosen[j][j]) continue;  // row separator x_{i,j} != x_{j,j}
            chosen[i][j] = value;
            column_sum[j] += value;
            --remaining_in_column[j];
            bool ok = true;
            if (remaining_in_column[j] == 0) {
                column_done[j] = true;
                for (int jj = 1; jj <= g.m && ok; ++jj)
                    if (jj != j && column_done[jj] && column_sum[jj] == column_sum[j]) ok = false;
            }
            if (ok) self(self, pos + 1);
            if (remaining_in_column[j] == 0) column_done[j] = false;
            ++remaining_in_column[j];
            column_sum[j] -= value;
            if (result) return;
        }
    };
    assign(assign, 0);

    if (!result)
        throw std::logic_error("nullstellensatz_coloring: search exhausted; this contradicts "
                               "the nonzero target coefficient");
    return *result;
}

}  // namespace rookdist
