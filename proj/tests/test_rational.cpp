#include <doctest.h>

#include "mog/rational.hpp"

using mog::Rational;

TEST_CASE("parsing accepts integers, fractions and decimals") {
    CHECK(mog::parse_rational("48") == Rational(48));
    CHECK(mog::parse_rational("11/15") == Rational(11, 15));
    CHECK(mog::parse_rational("0.5") == Rational(1, 2));
    CHECK(mog::parse_rational("0.733333") == Rational(733333, 1000000));
    CHECK(mog::parse_rational("2/4") == Rational(1, 2));
    CHECK(mog::parse_rational("0") == Rational(0));
    CHECK(mog::parse_rational(".25") == Rational(1, 4));
}

TEST_CASE("parsing rejects malformed and negative input") {
    CHECK_THROWS_AS(mog::parse_rational(""), mog::input_error);
    CHECK_THROWS_AS(mog::parse_rational("-3"), mog::input_error);
    CHECK_THROWS_AS(mog::parse_rational("1/0"), mog::input_error);
    CHECK_THROWS_AS(mog::parse_rational("1/2/3"), mog::input_error);
    CHECK_THROWS_AS(mog::parse_rational("1.2.3"), mog::input_error);
    CHECK_THROWS_AS(mog::parse_rational("a"), mog::input_error);
    CHECK_THROWS_AS(mog::parse_rational("1/2.5"), mog::input_error);
}

TEST_CASE("exact rendering") {
    CHECK(mog::to_exact_string(Rational(3, 4)) == "3/4");
    CHECK(mog::to_exact_string(Rational(8, 4)) == "2");
    CHECK(mog::to_exact_string(Rational(0)) == "0");
}

TEST_CASE("decimal rendering rounds half-up and trims trailing zeros") {
    CHECK(mog::to_decimal_string(Rational(3, 4), 6) == "0.75");
    CHECK(mog::to_decimal_string(Rational(11, 15), 6) == "0.733333");
    CHECK(mog::to_decimal_string(Rational(2, 3), 6) == "0.666667");
    CHECK(mog::to_decimal_string(Rational(48), 6) == "48");
    CHECK(mog::to_decimal_string(Rational(1, 2), 0) == "1");
    CHECK(mog::to_decimal_string(Rational(1, 3), 2) == "0.33");
}

TEST_CASE("integer powers") {
    CHECK(mog::rational_pow(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(mog::rational_pow(Rational(3, 2), 0) == 1);
    CHECK(mog::rational_pow(Rational(2), -3) == Rational(1, 8));
    CHECK_THROWS_AS(mog::rational_pow(Rational(0), -1), mog::input_error);
}

TEST_CASE("floor_log brackets the value exactly") {
    const Rational base(11, 10);
    for (const Rational v : {Rational(1), Rational(7, 5), Rational(100), Rational(1, 37)}) {
        const long k = mog::floor_log(v, base);
        CHECK(mog::rational_pow(base, k) <= v);
        CHECK(mog::rational_pow(base, k + 1) > v);
    }
    CHECK_THROWS_AS(mog::floor_log(Rational(0), base), mog::positivity_error);
    CHECK_THROWS_AS(mog::floor_log(Rational(1), Rational(1)), mog::input_error);
}
