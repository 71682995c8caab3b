#include <limits>
#include <sstream>

#include "doctest.h"
#include "ncfin/rational.hpp"

using ncfin::Rational;

TEST_SUITE("exactla") {

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, -5).is_zero());
  CHECK(Rational().is_zero());
  CHECK(Rational(7, 7).is_one());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/2/3"));
}

TEST_CASE("arithmetic") {
  Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));
  CHECK(half > third);
  CHECK((half <=> half) == std::strong_ordering::equal);
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("overflow promotes to arbitrary precision and back") {
  const Rational big(std::numeric_limits<long long>::max());
  Rational sq = big * big;
  CHECK(sq.numerator() == mpz_class("85070591730234615847396907784232501249"));
  Rational back = sq / big;
  CHECK(back == big);
  CHECK(back.str() == std::to_string(std::numeric_limits<long long>::max()));
  Rational tiny = Rational(1) / big / big;
  CHECK((tiny * big * big).is_one());
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  Rational min(std::numeric_limits<long long>::min());
  CHECK((-min).numerator() == -mpz_class(min.numerator()));
}

TEST_CASE("binomial as a polynomial in n") {
  CHECK(ncfin::binomial(5, 2) == Rational(10));
  CHECK(ncfin::binomial(3, 0) == Rational(1));
  CHECK(ncfin::binomial(2, 5).is_zero());
  CHECK(ncfin::binomial(0, 1).is_zero());
  CHECK(ncfin::binomial(-1, 2) == Rational(1));
}

}
