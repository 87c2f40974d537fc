#include <doctest.h>

#include "cevia/error.hpp"
#include "cevia/rational.hpp"

using cevia::Errc;
using cevia::Error;
using cevia::Rational;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no cevia::Error thrown");
  return Errc::ParseError;
}
}  // namespace

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("-11") == Rational(-11));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("-2/5") == Rational(-2, 5));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("-.5") == Rational(-1, 2));
  CHECK(Rational::parse("+3") == Rational(3));
}

TEST_CASE("parse rejects garbage") {
  CHECK(code_of([] { Rational::parse("x"); }) == Errc::ParseError);
  CHECK(code_of([] { Rational::parse(""); }) == Errc::ParseError);
  CHECK(code_of([] { Rational::parse("1/"); }) == Errc::ParseError);
  CHECK(code_of([] { Rational::parse("6/-4"); }) == Errc::ParseError);
  CHECK(code_of([] { Rational::parse("0x10"); }) == Errc::ParseError);
  CHECK(code_of([] { Rational::parse("1/0"); }) == Errc::DivisionByZero);
}

TEST_CASE("canonical strings and arithmetic") {
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(0, 5).str() == "0");
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) / Rational(-1, 4)) == Rational(-2));
  CHECK(Rational(-3, 7).reciprocal() == Rational(-7, 3));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == Errc::DivisionByZero);
  CHECK(Rational(-5, 2) < Rational(-2));
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
}

TEST_CASE("exact square roots") {
  CHECK(cevia::exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK_FALSE(cevia::exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(cevia::exact_sqrt(Rational(-4)).has_value());
  CHECK(cevia::exact_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("simplest rational in an interval") {
  CHECK(cevia::simplest_between(Rational(-31, 10), Rational(-29, 10)) == Rational(-3));
  CHECK(cevia::simplest_between(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
  CHECK(cevia::simplest_between(Rational(-1, 2), Rational(1, 2)) == Rational(0));
  CHECK(cevia::simplest_between(Rational(7, 2), Rational(7, 2)) == Rational(7, 2));
}
