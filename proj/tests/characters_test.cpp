#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ncfin/arnold.hpp"
#include "ncfin/characters.hpp"
#include "ncfin/simples.hpp"

using namespace ncfin;

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out(hi - lo + 1);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

Rational value_at(const std::vector<std::pair<Partition, Rational>>& table, const Partition& p) {
  for (const auto& [q, v] : table)
    if (q == p) return v;
  FAIL("class missing");
  return {};
}

CharacterPolynomial poly(std::initializer_list<std::pair<CharacterPolynomial::Exponents, Rational>> terms) {
  CharacterPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_SUITE("chars") {

TEST_CASE("partitions and cycle types") {
  const auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].str() == "(4)");
  CHECK(p4[1].str() == "(3,1)");
  CHECK(p4[2].str() == "(2,2)");
  CHECK(p4[4].str() == "(1,1,1,1)");
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(8).size() == 22);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Partition& p : partitions(n)) CHECK(cycle_type(permutation_of_type(p).map()) == p);
  CHECK_THROWS_AS(cycle_type(SetMap(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("characters of simple modules") {
  const auto t = character(make_simple(SimpleSpec::C(1), 4), 3);
  CHECK(value_at(t, {{1, 1, 1}}) == Rational(3));
  CHECK(value_at(t, {{2, 1}}) == Rational(1));
  CHECK(value_at(t, {{3}}) == Rational(0));
  CHECK(format_character_table(t) == "(3) 0\n(2,1) 1\n(1,1,1) 3\n");

  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& [p, v] : character(make_simple(SimpleSpec::D1(), 5), n)) CHECK(v == Rational(1));
  CHECK_THROWS_AS(character(make_simple(SimpleSpec::C(1), 3), 4), std::out_of_range);
}

TEST_CASE("characters are class functions and start at the dimension") {
  std::vector<CatModule> fixtures = {make_simple(SimpleSpec::C(2), 6), make_simple(SimpleSpec::C(3), 6),
                                     arnold_module(1, 6), arnold_module(2, 6)};
  for (const CatModule& v : fixtures)
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto table = character(v, n);
      CHECK(table.back().second == Rational(static_cast<long>(v.dim(n))));
      // Every permutation of [n] has the tabulated value for its cycle type.
      if (n > 5) continue;
      std::vector<std::size_t> values(n);
      std::iota(values.begin(), values.end(), 1);
      do {
        const SetMap s(n, values);
        const Matrix m = v.act(lift(s, LiftMode::Injection));
        Rational trace;
        for (std::size_t i = 0; i < m.rows(); ++i) trace += m(i, i);
        CHECK(trace == value_at(table, cycle_type(s)));
      } while (std::next_permutation(values.begin(), values.end()));
    }
}

TEST_CASE("character polynomial evaluation and printing") {
  const auto x1 = poly({{{1}, 1}});
  const auto x2 = poly({{{0, 1}, 1}});
  const auto c2 = poly({{{2}, 1}, {{0, 1}, 1}});
  CHECK(x1.evaluate({{1, 1, 1}}) == Rational(3));
  CHECK(x2.evaluate({{3}}) == Rational(0));
  CHECK(c2.evaluate({{2, 1}}) == Rational(1));
  CHECK(c2.str() == "C(X1,2) + X2");
  CHECK(c2.degree() == 2);
  CHECK(poly({{{}, 1}}).str() == "1");
  CHECK(CharacterPolynomial().str() == "0");
  CHECK(poly({{{1}, Rational(-1, 2)}, {{}, 3}}).str() == "-1/2*X1 + 3");
  CHECK(poly({{{1, 1}, 2}, {{}, -1}}).str() == "2*X1*X2 - 1");
  CHECK(monomials_up_to(2).size() == 4);
  CHECK(monomials_up_to(3).size() == 7);
}

TEST_CASE("fitting character polynomials") {
  auto fitted = [](const CatModule& v, std::size_t d, std::vector<std::size_t> fit, std::vector<std::size_t> test) {
    const CharacterFit r = fit_character_polynomial(v, d, fit, test);
    REQUIRE(r.ok());
    return r.polynomial->str();
  };
  CHECK(fitted(make_simple(SimpleSpec::C(1), 6), 1, range(1, 4), range(5, 6)) == "X1");
  CHECK(fitted(make_simple(SimpleSpec::C(2), 7), 2, range(1, 5), range(6, 7)) == "C(X1,2) + X2");
  CHECK(fitted(make_simple(SimpleSpec::D1(), 6), 0, range(1, 3), range(4, 6)) == "1");
  CHECK(fitted(make_simple(SimpleSpec::C(3), 8), 3, range(1, 6), range(7, 8)) == "C(X1,3) + X1*X2 + X3");

  // C_3 has no degree-1 character polynomial.
  const CharacterFit bad = fit_character_polynomial(make_simple(SimpleSpec::C(3), 6), 1, range(1, 4), {});
  CHECK(bad.outcome == CharacterFit::Outcome::Inconsistent);
  REQUIRE(bad.witness);
  CHECK(bad.witness->level >= 1);

  // One level cannot see X2 or C(X1,2): the fit is underdetermined and fails the test levels.
  const CharacterFit loose = fit_character_polynomial(make_simple(SimpleSpec::C(2), 6), 2, {1}, range(2, 6));
  CHECK(!loose.unique);
  CHECK(loose.outcome == CharacterFit::Outcome::TestMismatch);
  REQUIRE(loose.witness);
  CHECK(loose.witness->predicted.has_value());

  CHECK_THROWS_AS(fit_character_polynomial(make_simple(SimpleSpec::C(1), 4), 1, {1, 2}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(fit_character_polynomial(make_simple(SimpleSpec::C(1), 4), 1, {1, 5}, {}), std::out_of_range);
}

TEST_CASE("fitting dimension polynomials") {
  std::vector<Rational> c2, h1, pow2;
  for (long n = 1; n <= 8; ++n) {
    c2.push_back(binomial(n, 2));
    h1.push_back(Rational(static_cast<long>(arnold_dim(1, static_cast<std::size_t>(n)))));
    pow2.push_back(Rational(1L << n));
  }
  const DimensionFit a = fit_dimension_polynomial(c2, 2);
  REQUIRE(a.ok());
  CHECK(a.polynomial->str() == "1/2*n^2 - 1/2*n");
  const DimensionFit b = fit_dimension_polynomial(h1, 2);
  REQUIRE(b.ok());
  CHECK(b.polynomial->degree() == 2);
  CHECK(*b.polynomial == *a.polynomial);
  const DimensionFit c = fit_dimension_polynomial(pow2, 3);
  CHECK(!c.ok());
  CHECK(c.failing_n == 5);
  CHECK_THROWS_AS(fit_dimension_polynomial({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("character polynomial specializes to the dimension polynomial") {
  const CatModule v = arnold_module(1, 8);
  const CharacterFit chi = fit_character_polynomial(v, 2, range(1, 6), range(7, 8));
  REQUIRE(chi.ok());
  std::vector<Rational> dims;
  for (std::size_t n = 1; n <= 8; ++n) dims.push_back(Rational(static_cast<long>(v.dim(n))));
  const DimensionFit dim = fit_dimension_polynomial(dims, 2);
  REQUIRE(dim.ok());
  for (std::size_t n = 1; n <= 8; ++n) {
    const Partition identity{std::vector<std::size_t>(n, 1)};
    CHECK(chi.polynomial->evaluate(identity) == (*dim.polynomial)(Rational(static_cast<long>(n))));
  }
}

}
