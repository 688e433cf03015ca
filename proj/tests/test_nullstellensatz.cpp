#include <catch2/catch_amalgamated.hpp>

#include "rookdist/corpus.hpp"
#include "rookdist/nullstellensatz.hpp"
#include "rookdist/oracle.hpp"

using namespace rookdist;

TEST_CASE("layout bookkeeping: arity n(n+1), degree n^2") {
    for (int n = 1; n <= 6; ++n) {
        FormLayout layout(n);
        CHECK(layout.slots() == n * (n + 1));
        CHECK(layout.column_part_degree() == (n + 1) * n / 2);
        CHECK(layout.row_part_degree() == n * (n - 1) / 2);
        CHECK(layout.degree() == n * n);
    }
}

TEST_CASE("base case: single column difference, empty row product") {
    FormLayout layout(1);
    SparsePoly col = column_separation_product(1);
    CHECK(col.term_count() == 2);
    Monomial x12(layout.slots(), 0);
    x12[layout.slot(1, 2)] = 1;
    Monomial x11(layout.slots(), 0);
    x11[layout.slot(1, 1)] = 1;
    CHECK(col.coefficient(x12) == 1);
    CHECK(col.coefficient(x11) == -1);

    SparsePoly row = row_separation_product(1);
    CHECK(row == SparsePoly::constant(layout.slots(), 1));
}

TEST_CASE("two-row row product is the single separator of column 1") {
    FormLayout layout(2);
    SparsePoly row = row_separation_product(2);
    CHECK(row.term_count() == 2);
    Monomial below(layout.slots(), 0);
    below[layout.slot(2, 1)] = 1;
    Monomial diag(layout.slots(), 0);
    diag[layout.slot(1, 1)] = 1;
    CHECK(row.coefficient(below) == 1);
    CHECK(row.coefficient(diag) == -1);
}

TEST_CASE("expanded degrees follow the factor count") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(column_separation_product(n).total_degree() == (n + 1) * n / 2);
        CHECK(row_separation_product(n).total_degree() == n * (n - 1) / 2);
    }
}

TEST_CASE("off-diagonal coefficient equals the factorial product for small n") {
    CHECK(off_diagonal_coefficient(1) == 1);
    CHECK(off_diagonal_coefficient(2) == 2);
    CHECK(off_diagonal_coefficient(3) == 12);
}

TEST_CASE("closed form values") {
    CHECK(factorial_product(1) == 1);
    CHECK(factorial_product(2) == 2);
    CHECK(factorial_product(3) == 12);
    CHECK(factorial_product(4) == 288);
    CHECK(factorial_product(5) == 34560);
}

TEST_CASE("expansion budget refusal") {
    CHECK_THROWS_AS(column_separation_product(4, 1000), BudgetExceeded);
}

TEST_CASE("factored evaluation vanishes exactly when a factor does") {
    // equal column sums
    FormLayout layout(2);
    std::vector<long> v(layout.slots(), 0);
    v[layout.slot(1, 1)] = 1;
    v[layout.slot(2, 1)] = 2;
    v[layout.slot(1, 2)] = 2;
    v[layout.slot(2, 2)] = 1;  // columns 1 and 2 both sum to 3
    v[layout.slot(1, 3)] = 5;
    v[layout.slot(2, 3)] = 5;
    CHECK(evaluate_form(2, v) == 0);

    // row separator zero: x_{2,1} == x_{1,1}
    std::vector<long> w{1, 2, 7,
                             1, 3, 5};
    CHECK(evaluate_form(2, w) == 0);

    // distinct column sums 1, 2, 3 and a separated first column
    std::vector<long> u{0, 0, 2,
                             1, 2, 1};
    BigInt val = evaluate_form(2, u);
    CHECK(val != 0);
    Coloring c(GridSpec(2, 3), {0, 0, 2, 1, 2, 1});
    CHECK(evaluate_form(c) == val);
    CHECK(is_distinguishing(c).verdict);
}

TEST_CASE("nonzero form values certify distinguishing colorings") {
    SplitMix64 rng(17);
    for (int n = 2; n <= 3; ++n) {
        GridSpec g(n, n + 1);
        for (int trial = 0; trial < 200; ++trial) {
            Coloring c = random_coloring(g, 4, rng);
            if (sgn(evaluate_form(c)) != 0) {
                CAPTURE(n, trial);
                CHECK(is_distinguishing(c).verdict);
            }
        }
    }
}

TEST_CASE("two-cell instance forces distinct colors") {
    ListAssignment L = ListAssignment::uniform(GridSpec(1, 2), {1, 2});
    Coloring c = nullstellensatz_coloring(L);
    CHECK(c.at(1, 1) != c.at(1, 2));
    CHECK(is_distinguishing(c).verdict);
}

TEST_CASE("uniform two-lists on three columns give three distinct vectors") {
    ListAssignment L = ListAssignment::uniform(GridSpec(2, 3), {1, 2});
    Coloring c = nullstellensatz_coloring(L);
    CHECK(L.admits(c));
    CHECK(evaluate_form(c) != 0);
    std::set<ColorVector> vecs;
    for (int j = 1; j <= 3; ++j) vecs.insert(column_vector(c, j));
    CHECK(vecs.size() == 3);
    CHECK(is_distinguishing(c).verdict);
}

TEST_CASE("random two-list instances always succeed with certified output") {
    SplitMix64 rng(23);
    for (int n = 2; n <= 3; ++n) {
        GridSpec g(n, n + 1);
        for (int trial = 0; trial < 200; ++trial) {
            ListAssignment L = random_list_assignment(g, 2, 5, rng);
            Coloring c = nullstellensatz_coloring(L);
            CAPTURE(n, trial);
            CHECK(L.admits(c));
            CHECK(evaluate_form(c) != 0);
            CHECK(is_distinguishing(c).verdict);
        }
    }
}

TEST_CASE("the guarantee extends to wider grids") {
    SplitMix64 rng(41);
    for (int n : {5, 6}) {
        GridSpec g(n, n + 1);
        for (int trial = 0; trial < 25; ++trial) {
            ListAssignment L = random_list_assignment(g, 2, 5, rng);
            Coloring c = nullstellensatz_coloring(L);
            CAPTURE(n, trial);
            CHECK(L.admits(c));
            CHECK(is_distinguishing(c).verdict);
        }
    }
}

TEST_CASE("oversized lists are truncated to their two smallest colors") {
    ListAssignment L = ListAssignment::uniform(GridSpec(2, 3), {4, 9, 1, 7});
    Coloring c = nullstellensatz_coloring(L);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) CHECK((c.at(i, j) == 1 || c.at(i, j) == 4));
    CHECK(is_distinguishing(c).verdict);
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(nullstellensatz_coloring(ListAssignment::uniform(GridSpec(2, 4), {1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(nullstellensatz_coloring(ListAssignment(
                        GridSpec(1, 2), {{1, 2}, {3}})),
                    std::invalid_argument);
}
