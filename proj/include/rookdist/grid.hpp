#pragma once

// Vertex lattice of the Cartesian product of two complete graphs K_n and
// K_m, viewed as an n-by-m grid: rows and columns induce cliques, and for
// n < m every automorphism is a pair (row permutation, column permutation).
// Positions and permutations are 1-based throughout, matching the usual
// matrix convention v_{1,1} .. v_{n,m}.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rookdist/common.hpp"

namespace rookdist {

using Color = int;

/// Permutation of {1..k} in one-line notation: of(i) is the image of i.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection on 1..k");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int k) {
        std::vector<int> image(k);
        std::iota(image.begin(), image.end(), 1);
        return Permutation(std::move(image));
    }

    static Permutation transposition(int k, int a, int b) {
        Permutation p = identity(k);
        std::swap(p.image_[a - 1], p.image_[b - 1]);
        return p;
    }

    int size() const { return static_cast<int>(image_.size()); }
    int of(int i) const { return image_[i - 1]; }
    const std::vector<int>& one_line() const { return image_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (of(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int i = 1; i <= size(); ++i) inv[of(i) - 1] = i;
        return Permutation(std::move(inv));
    }

    /// (f * g)(i) = f(g(i)).
    friend Permutation compose(const Permutation& f, const Permutation& g) {
        if (f.size() != g.size())
            throw std::invalid_argument("compose: size mismatch");
        std::vector<int> image(f.size());
        for (int i = 1; i <= f.size(); ++i) image[i - 1] = f.of(g.of(i));
        return Permutation(std::move(image));
    }

    /// Advance to the lexicographically next permutation; false after the last.
    bool next() { return std::next_permutation(image_.begin(), image_.end()); }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// Dimensions of the grid: n rows (copies of K_m), m columns (copies of K_n).
/// Requires 1 <= n < m strictly; the square case has extra symmetries and is
/// not modeled here.
struct GridSpec {
    int n = 0;
    int m = 0;

    GridSpec(int n_, int m_) : n(n_), m(m_) {
        if (n < 1 || m <= n)
            throw std::invalid_argument("GridSpec: need 1 <= n < m");
    }

    int cells() const { return n * m; }
    auto operator<=>(const GridSpec&) const = default;
};

/// A grid symmetry: sigma permutes rows, tau permutes columns.
struct Automorphism {
    Permutation sigma;
    Permutation tau;

    static Automorphism identity(const GridSpec& g) {
        return {Permutation::identity(g.n), Permutation::identity(g.m)};
    }

    bool is_identity() const { return sigma.is_identity() && tau.is_identity(); }

    Automorphism inverse() const { return {sigma.inverse(), tau.inverse()}; }

    friend Automorphism compose(const Automorphism& f, const Automorphism& g) {
        return {compose(f.sigma, g.sigma), compose(f.tau, g.tau)};
    }

    auto operator<=>(const Automorphism&) const = default;
};

/// Total assignment of a color to every lattice position, stored row-major.
class Coloring {
public:
    Coloring(GridSpec grid, std::vector<Color> cells)
        : grid_(grid), cells_(std::move(cells)) {
        if (cells_.size() != static_cast<std::size_t>(grid_.cells()))
            throw std::invalid_argument("Coloring: cell count does not match grid");
    }

    static Coloring constant(GridSpec grid, Color c) {
        return Coloring(grid, std::vector<Color>(grid.cells(), c));
    }

    const GridSpec& grid() const { return grid_; }
    Color at(int i, int j) const { return cells_[idx(i, j)]; }
    const std::vector<Color>& cells() const { return cells_; }

    auto operator<=>(const Coloring&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * grid_.m + (j - 1);
    }

    GridSpec grid_;
    std::vector<Color> cells_;
};

/// Per-vertex sets of admissible colors, row-major. Lists are kept sorted
/// and deduplicated; every list must be non-empty.
class ListAssignment {
public:
    ListAssignment(GridSpec grid, std::vector<std::vector<Color>> lists)
        : grid_(grid), lists_(std::move(lists)) {
        if (lists_.size() != static_cast<std::size_t>(grid_.cells()))
            throw std::invalid_argument("ListAssignment: list count does not match grid");
        for (auto& list : lists_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            if (list.empty())
                throw std::invalid_argument("ListAssignment: empty list");
        }
    }

    static ListAssignment uniform(GridSpec grid, std::vector<Color> list) {
        return ListAssignment(
            grid, std::vector<std::vector<Color>>(grid.cells(), std::move(list)));
    }

    const GridSpec& grid() const { return grid_; }
    const std::vector<Color>& at(int i, int j) const { return lists_[idx(i, j)]; }
    const std::vector<std::vector<Color>>& lists() const { return lists_; }

    /// Product of all list sizes: the size of the assignment space.
    BigInt assignment_count() const {
        BigInt total = 1;
        for (const auto& list : lists_) total *= static_cast<unsigned long>(list.size());
        return total;
    }

    bool admits(const Coloring& c) const {
        if (c.grid() != grid_) return false;
        for (std::size_t p = 0; p < lists_.size(); ++p)
            if (!std::binary_search(lists_[p].begin(), lists_[p].end(), c.cells()[p]))
                return false;
        return true;
    }

    auto operator<=>(const ListAssignment&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * grid_.m + (j - 1);
    }

    GridSpec grid_;
    std::vector<std::vector<Color>> lists_;
};

/// The multiset of colors in one column, canonicalized by sorting.
/// Invariant under any row permutation of the coloring.
struct ColorPattern {
    std::vector<Color> sorted;

    ColorPattern() = default;
    explicit ColorPattern(std::vector<Color> colors) : sorted(std::move(colors)) {
        std::sort(sorted.begin(), sorted.end());
    }

    std::size_t multiplicity() const { return sorted.size(); }

    std::vector<std::pair<Color, int>> counts() const {
        std::vector<std::pair<Color, int>> out;
        for (Color c : sorted) {
            if (!out.empty() && out.back().first == c)
                ++out.back().second;
            else
                out.emplace_back(c, 1);
        }
        return out;
    }

    auto operator<=>(const ColorPattern&) const = default;
};

/// The top-to-bottom sequence of colors in one column. Equal vectors have
/// equal patterns; the converse fails.
using ColorVector = std::vector<Color>;

inline void check_column_index(const Coloring& c, int j) {
    if (j < 1 || j > c.grid().m)
        throw std::out_of_range("column index out of range");
}

inline ColorVector column_vector(const Coloring& c, int j) {
    check_column_index(c, j);
    ColorVector v(c.grid().n);
    for (int i = 1; i <= c.grid().n; ++i) v[i - 1] = c.at(i, j);
    return v;
}

inline ColorPattern column_pattern(const Coloring& c, int j) {
    return ColorPattern(column_vector(c, j));
}

/// result(i, j) = c(sigma^-1(i), tau^-1(j)); the left group action, so
/// apply(f*g, c) == apply(f, apply(g, c)).
inline Coloring apply_automorphism(const Automorphism& g, const Coloring& c) {
    if (g.sigma.size() != c.grid().n || g.tau.size() != c.grid().m)
        throw std::invalid_argument("apply_automorphism: dimension mismatch");
    Permutation sinv = g.sigma.inverse();
    Permutation tinv = g.tau.inverse();
    std::vector<Color> cells(c.grid().cells());
    std::size_t p = 0;
    for (int i = 1; i <= c.grid().n; ++i)
        for (int j = 1; j <= c.grid().m; ++j) cells[p++] = c.at(sinv.of(i), tinv.of(j));
    return Coloring(c.grid(), std::move(cells));
}

/// Rename colors to 0,1,2,... in first-occurrence order, reading row-major.
/// A pure relabeling used for deduplication; it is not an automorphism and
/// no invariance of the distinguishing property is implied.
inline Coloring canonicalize_colors(const Coloring& c) {
    std::map<Color, Color> rename;
    std::vector<Color> cells;
    cells.reserve(c.cells().size());
    for (Color col : c.cells()) {
        auto [it, inserted] = rename.try_emplace(col, static_cast<Color>(rename.size()));
        cells.push_back(it->second);
    }
    return Coloring(c.grid(), std::move(cells));
}

}  // namespace rookdist
