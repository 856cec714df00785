#include <doctest.h>

#include "clab/rational.hpp"

using clab::Rational;

TEST_CASE("rational arithmetic reduces and normalizes signs") {
    Rational a(2, 4), b(-3, 6);
    CHECK(a == Rational(1, 2));
    CHECK(b == Rational(-1, 2));
    CHECK(a + b == Rational(0));
    CHECK(a * b == Rational(-1, 4));
    CHECK(a / b == Rational(-1));
    CHECK(Rational(7, -14) == Rational(-1, 2));
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-4));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(9, 10).floor() == 0);
    CHECK(Rational(-9, 10).floor() == -1);
    CHECK(Rational(-3).floor() == -3);
}

TEST_CASE("rational guards") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // intermediates go through 128-bit, so near-limit values survive a round trip
    Rational big(INT64_MAX / 3, 5);
    CHECK(big * Rational(5, 7) / Rational(5, 7) == big);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(INT64_MAX), std::overflow_error);
}

TEST_CASE("bernoulli numbers") {
    CHECK(clab::bernoulli(0) == Rational(1));
    CHECK(clab::bernoulli(1) == Rational(-1, 2));
    CHECK(clab::bernoulli(2) == Rational(1, 6));
    CHECK(clab::bernoulli(4) == Rational(-1, 30));
    CHECK(clab::bernoulli(6) == Rational(1, 42));
    CHECK(clab::bernoulli(12) == Rational(-691, 2730));
    CHECK(clab::bernoulli(3) == Rational(0));
    CHECK(clab::bernoulli(30) == Rational(8615841276005LL, 14322));
    CHECK_THROWS(clab::bernoulli(40));
}
