#include "doctest.h"
#include "okb/errors.hpp"
#include "okb/rational.hpp"

using namespace okb;

TEST_SUITE("rational") {
  TEST_CASE("parse accepts canonical and non-canonical forms") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(parse_rational("-0")) == "0");
    CHECK(parse_rational("2/4") == make_rational(1, 2));
  }

  TEST_CASE("parse rejects everything else") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("  "), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("--2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  }

  TEST_CASE("make_rational canonicalizes; zero denominator is refused") {
    CHECK(to_string(make_rational(2, -4)) == "-1/2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
  }

  TEST_CASE("sign") {
    CHECK(sign(make_rational(-1, 3)) == -1);
    CHECK(sign(Rational(0)) == 0);
    CHECK(sign(make_rational(5, 2)) == 1);
  }

  TEST_CASE("decimal_string: fixed point, ties to even, no trailing zeros") {
    CHECK(decimal_string(make_rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(make_rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(make_rational(1, 2), 6) == "0.5");
    CHECK(decimal_string(Rational(5), 6) == "5");
    CHECK(decimal_string(make_rational(-1, 4), 2) == "-0.25");

    // ties land on the even last digit
    CHECK(decimal_string(make_rational(1, 2), 0) == "0");
    CHECK(decimal_string(make_rational(3, 2), 0) == "2");
    CHECK(decimal_string(make_rational(-3, 2), 0) == "-2");
    CHECK(decimal_string(make_rational(25, 100), 1) == "0.2");
    CHECK(decimal_string(make_rational(35, 100), 1) == "0.4");
    CHECK(decimal_string(make_rational(1, 2000000), 6) == "0");
    CHECK(decimal_string(make_rational(3, 2000000), 6) == "0.000002");

    // no "-0"
    CHECK(decimal_string(make_rational(-1, 2000000), 6) == "0");
    CHECK(decimal_string(make_rational(1, 1000000), 6) == "0.000001");
  }
}
