#include <catch2/catch_amalgamated.hpp>

#include "rookdist/common.hpp"
#include "rookdist/polynomial.hpp"

using namespace rookdist;

namespace {

SparsePoly x_plus_y() {
    return poly_add(SparsePoly::variable(2, 0), SparsePoly::variable(2, 1));
}

SparsePoly x_minus_y() {
    return poly_add(SparsePoly::variable(2, 0), SparsePoly::variable(2, 1, -1));
}

}  // namespace

TEST_CASE("difference of squares") {
    SparsePoly p = poly_mul(x_plus_y(), x_minus_y());
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 2}) == -1);
    CHECK(p.coefficient({1, 1}) == 0);
}

TEST_CASE("multiplying by zero annihilates") {
    SparsePoly zero(2);
    SparsePoly p = poly_mul(x_plus_y(), zero);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("binomial square merges the cross terms") {
    SparsePoly p = poly_mul(x_plus_y(), x_plus_y());
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({1, 1}) == 2);
    CHECK(p.coefficient({0, 2}) == 1);
    CHECK(p.total_degree() == 2);
}

TEST_CASE("arity mismatches are rejected") {
    CHECK_THROWS_AS(poly_add(SparsePoly(2), SparsePoly(3)), std::invalid_argument);
    CHECK_THROWS_AS(poly_mul(SparsePoly::variable(2, 0), SparsePoly::variable(3, 0)),
                    std::invalid_argument);
    SparsePoly p(2);
    CHECK_THROWS_AS(p.add_term({1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("cancelling terms vanish from the map") {
    SparsePoly p = x_plus_y();
    p.add_term({1, 0}, -1);
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient({0, 1}) == 1);
}

TEST_CASE("term budget aborts oversized expansions") {
    SparsePoly many(8);
    SparsePoly acc = SparsePoly::constant(8, 1);
    for (int v = 0; v < 8; ++v) {
        SparsePoly f = poly_add(SparsePoly::constant(8, 1), SparsePoly::variable(8, v));
        acc = poly_mul(acc, f);
    }
    CHECK(acc.term_count() == 256);
    CHECK_THROWS_AS(poly_mul(acc, acc, 1000), BudgetExceeded);
}

TEST_CASE("multiplication agrees with evaluation at random points") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int arity = 3;
        auto random_poly = [&] {
            SparsePoly p(arity);
            int terms = 1 + static_cast<int>(rng.below(5));
            for (int t = 0; t < terms; ++t) {
                Monomial m(arity);
                for (auto& e : m) e = static_cast<std::uint8_t>(rng.below(3));
                p.add_term(std::move(m), static_cast<long>(rng.below(9)) - 4);
            }
            return p;
        };
        SparsePoly a = random_poly();
        SparsePoly b = random_poly();
        SparsePoly ab = poly_mul(a, b);
        std::vector<BigInt> point;
        for (int v = 0; v < arity; ++v) point.emplace_back(static_cast<long>(rng.below(7)) - 3);
        CHECK(ab.evaluate(point) == a.evaluate(point) * b.evaluate(point));
    }
}

TEST_CASE("product coefficient matches the expanded product") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int arity = 3;
        auto random_poly = [&] {
            SparsePoly p(arity);
            int terms = 1 + static_cast<int>(rng.below(6));
            for (int t = 0; t < terms; ++t) {
                Monomial m(arity);
                for (auto& e : m) e = static_cast<std::uint8_t>(rng.below(3));
                p.add_term(std::move(m), static_cast<long>(rng.below(9)) - 4);
            }
            return p;
        };
        SparsePoly a = random_poly();
        SparsePoly b = random_poly();
        SparsePoly ab = poly_mul(a, b);
        Monomial target(arity);
        for (auto& e : target) e = static_cast<std::uint8_t>(rng.below(5));
        CHECK(product_coefficient(a, b, target) == ab.coefficient(target));
    }
}
