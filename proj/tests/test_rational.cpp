#include <doctest.h>

#include "rational.hpp"

using namespace credal;

TEST_CASE("rational parsing accepts integers, fractions, and decimals") {
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("3/10") == Rational(3, 10));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("0.3") == Rational(3, 10)); // exact, not a double
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("5.") == Rational(5));
    CHECK(parse_rational(" 1/2 ") == Rational(1, 2));
    CHECK(parse_rational("+4/6") == Rational(2, 3)); // normalized
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("formatting is lowest-terms and round-trips") {
    CHECK(format_rational(Rational(3, 10)) == "3/10");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(-1, 3)) == "-1/3");
    CHECK(format_rational(Rational(0)) == "0");
    for (const char* text : {"2", "-7", "3/10", "-1/3", "0"})
        CHECK(format_rational(parse_rational(text)) == text);
}

TEST_CASE("floor and ceiling handle negatives") {
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_floor(Rational(4)) == 4);
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_ceil(Rational(-4)) == -4);
}
