#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rookdist/interval.hpp"

using namespace rookdist;

TEST_CASE("exact integers have zero width") {
    Interval five = Interval::from_long(5);
    CHECK(five.lo_d() == 5.0);
    CHECK(five.hi_d() == 5.0);
    CHECK(five.width_d() == 0.0);
}

TEST_CASE("rationals are enclosed outward") {
    Interval third = Interval::from_ratio(1, 3);
    CHECK(third.valid());
    CHECK(third.lo_d() <= 1.0 / 3.0);
    CHECK(third.hi_d() >= 1.0 / 3.0);
    CHECK(third.width_d() < 1e-50);
}

TEST_CASE("arithmetic encloses the exact result") {
    Interval a = Interval::from_ratio(22, 7);
    Interval b = Interval::from_ratio(-3, 11);
    Interval sum = a + b;
    Interval prod = a * b;
    double exact_sum = 22.0 / 7.0 - 3.0 / 11.0;
    double exact_prod = (22.0 / 7.0) * (-3.0 / 11.0);
    CHECK(sum.lo_d() <= exact_sum);
    CHECK(sum.hi_d() >= exact_sum);
    CHECK(prod.lo_d() <= exact_prod);
    CHECK(prod.hi_d() >= exact_prod);
    CHECK((a - a).contains_zero());
}

TEST_CASE("division excludes zero denominators") {
    Interval one = Interval::from_long(1);
    Interval spanning = Interval::from_long(1) - Interval::from_long(1);
    CHECK_THROWS_AS(one / spanning, std::domain_error);
    Interval q = Interval::from_long(1) / Interval::from_long(3);
    CHECK(q.lo_d() <= 1.0 / 3.0);
    CHECK(q.hi_d() >= 1.0 / 3.0);
}

namespace {
Interval spanning_zero() { return Interval::from_long(-1) + Interval::from_long(2) - Interval::from_long(1); }
}  // namespace

TEST_CASE("sqrt, log, exp and pow stay rigorous") {
    Interval two = Interval::from_long(2);
    Interval root = sqrt(two);
    CHECK(root.lo_d() <= std::sqrt(2.0));
    CHECK(root.hi_d() >= std::sqrt(2.0));
    CHECK(root.width_d() < 1e-50);

    Interval back = exp(log(two));
    CHECK(back.lo_d() <= 2.0);
    CHECK(back.hi_d() >= 2.0);
    CHECK(back.width_d() < 1e-50);

    Interval p = pow(Interval::from_ratio(1, 2), Interval::from_ratio(3, 2));
    double exact = std::pow(0.5, 1.5);
    CHECK(p.lo_d() <= exact);
    CHECK(p.hi_d() >= exact);

    CHECK_THROWS_AS(log(spanning_zero()), std::domain_error);
}

TEST_CASE("directed comparisons are conclusive") {
    Interval a = Interval::from_ratio(1, 3);
    Interval b = Interval::from_ratio(1, 2);
    CHECK(a.certainly_less(b));
    CHECK(b.certainly_greater(a));
    CHECK(!a.certainly_less(a));
    CHECK(a.certainly_below_int(1));
    CHECK(b.certainly_at_least_int(0));
}

TEST_CASE("precision parameter narrows the enclosure") {
    Interval coarse = sqrt(Interval::from_long(2, 64));
    Interval fine = sqrt(Interval::from_long(2, 256));
    CHECK(fine.width_d() < coarse.width_d());
    CHECK(coarse.width_d() < 1e-15);
}
