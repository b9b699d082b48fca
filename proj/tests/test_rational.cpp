#include <doctest.h>

#include <stdexcept>

#include "hopf/rational.hpp"

using hopf::Int;
using hopf::Rational;

TEST_SUITE("rational arithmetic") {
  TEST_CASE("normalization") {
    CHECK(Rational(Int(2), Int(4)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(-2), Int(-4)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(2), Int(-4)).num() == Int(-1));
    CHECK(Rational(Int(2), Int(-4)).den() == Int(2));
    CHECK(Rational(Int(0), Int(7)).den() == Int(1));
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
  }

  TEST_CASE("field operations") {
    Rational a(Int(1), Int(2)), b(Int(1), Int(3));
    CHECK(a + b == Rational(Int(5), Int(6)));
    CHECK(a - b == Rational(Int(1), Int(6)));
    CHECK(a * b == Rational(Int(1), Int(6)));
    CHECK(a / b == Rational(Int(3), Int(2)));
    CHECK(-a == Rational(Int(-1), Int(2)));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  }

  TEST_CASE("ordering") {
    CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
    CHECK(Rational(Int(-1), Int(2)) < Rational(Int(1), Int(3)));
    CHECK(Rational(7) > Rational(Int(13), Int(2)));
    CHECK(Rational(0) <= Rational(0));
  }

  TEST_CASE("predicates") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(Int(4), Int(2)).is_integer());
    CHECK_FALSE(Rational(Int(1), Int(2)).is_integer());
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(abs(Rational(-2)) == Rational(2));
  }

  TEST_CASE("string round trip") {
    CHECK(Rational(Int(-3), Int(7)).str() == "-3/7");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(Int(4), Int(2)).str() == "2");
    CHECK(Rational::parse("22/7") == Rational(Int(22), Int(7)));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("-6/4") == Rational(Int(-3), Int(2)));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  }
}
