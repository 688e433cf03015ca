#pragma once

// Seeded instance generators for test and validation corpora. Everything
// here is a pure function of the seed: the same seed yields byte-identical
// instances on every platform.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rookdist/common.hpp"
#include "rookdist/grid.hpp"

namespace rookdist {

enum class ListStratum {
    uniform_columns,  // every column list-uniform
    mixed_columns,    // at least one uniform and one non-uniform column
    free_columns,     // no uniformity constraint
    no_uniform_columns,
};

inline std::vector<Color> random_list(int list_size, int universe, SplitMix64& rng) {
    if (list_size > universe)
        throw std::invalid_argument("random_list: list size exceeds universe");
    std::vector<Color> pool(universe);
    for (int c = 0; c < universe; ++c) pool[c] = c;
    std::vector<Color> out;
    for (int t = 0; t < list_size; ++t) {
        std::size_t at = rng.below(pool.size());
        out.push_back(pool[at]);
        pool.erase(pool.begin() + at);
    }
    // lists are sets; keep the generated form canonical so uniformity
    // comparisons match the normalized assignment
    std::sort(out.begin(), out.end());
    return out;
}

inline Coloring random_coloring(GridSpec g, int colors, SplitMix64& rng) {
    std::vector<Color> cells(g.cells());
    for (auto& c : cells) c = static_cast<Color>(rng.below(colors));
    return Coloring(g, std::move(cells));
}

inline ListAssignment random_list_assignment(GridSpec g, int list_size, int universe,
                                             SplitMix64& rng,
                                             ListStratum stratum = ListStratum::free_columns) {
    if ((stratum == ListStratum::no_uniform_columns || stratum == ListStratum::mixed_columns) &&
        g.n == 1)
        throw std::invalid_argument("single-row columns are always list-uniform");
    if (stratum != ListStratum::uniform_columns && list_size >= universe &&
        stratum != ListStratum::free_columns)
        throw std::invalid_argument("cannot vary lists inside a column: universe too small");

    std::vector<std::vector<Color>> lists(g.cells());
    auto fill_column = [&](int j, bool uniform) {
        if (uniform) {
            std::vector<Color> list = random_list(list_size, universe, rng);
            for (int i = 1; i <= g.n; ++i) lists[(i - 1) * g.m + (j - 1)] = list;
            return;
        }
        for (;;) {
            for (int i = 1; i <= g.n; ++i)
                lists[(i - 1) * g.m + (j - 1)] = random_list(list_size, universe, rng);
            for (int i = 2; i <= g.n; ++i)
                if (lists[(i - 1) * g.m + (j - 1)] != lists[j - 1]) return;
        }
    };

    for (int j = 1; j <= g.m; ++j) {
        switch (stratum) {
            case ListStratum::uniform_columns: fill_column(j, true); break;
            case ListStratum::no_uniform_columns: fill_column(j, false); break;
            case ListStratum::mixed_columns:
                // column 1 uniform, column 2 non-uniform, the rest random
                if (j == 1) fill_column(j, true);
                else if (j == 2) fill_column(j, false);
                else fill_column(j, rng.below(2) == 0);
                break;
            case ListStratum::free_columns:
                for (int i = 1; i <= g.n; ++i)
                    lists[(i - 1) * g.m + (j - 1)] = random_list(list_size, universe, rng);
                break;
        }
    }
    return ListAssignment(g, std::move(lists));
}

/// Deterministic corpus cycling through the uniform / non-uniform / mixed
/// strata so that all anchor-selection branches get exercised.
inline std::vector<ListAssignment> generate_corpus(int n, int m, int list_size, int universe,
                                                   int count, std::uint64_t seed) {
    GridSpec g(n, m);
    SplitMix64 rng(seed);
    std::vector<ListAssignment> out;
    out.reserve(count);
    for (int idx = 0; idx < count; ++idx) {
        ListStratum stratum;
        if (n == 1) {
            stratum = ListStratum::uniform_columns;  // single-row columns are uniform anyway
        } else {
            switch (idx % 3) {
                case 0: stratum = ListStratum::uniform_columns; break;
                case 1: stratum = ListStratum::no_uniform_columns; break;
                default: stratum = ListStratum::mixed_columns; break;
            }
        }
        out.push_back(random_list_assignment(g, list_size, universe, rng, stratum));
    }
    return out;
}

}  // namespace rookdist
