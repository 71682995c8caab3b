#include <random>

#include "doctest.h"
#include "ncfin/arnold.hpp"
#include "ncfin/characters.hpp"
#include "ncfin/simples.hpp"

using namespace ncfin;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Coefficient of t^i in (1+t)(1+2t)...(1+(n-1)t).
long stirling_oracle(std::size_t i, std::size_t n) {
  std::vector<long> c{1};
  for (std::size_t k = 1; k < n; ++k) {
    c.push_back(0);
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] += static_cast<long>(k) * c[j - 1];
  }
  return i < c.size() ? c[i] : 0;
}

OSElement product(const OSElement& x, const OSElement& y) {
  OSElement out(x.level(), x.degree() + y.degree());
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) {
      Pairs gens = m1.pairs;
      gens.insert(gens.end(), m2.pairs.begin(), m2.pairs.end());
      out.add(straighten(gens, x.level()), c1 * c2);
    }
  return out;
}

OSElement image(const SetMap& f, const OSElement& x) {
  OSElement out(f.cod(), x.degree());
  for (const auto& [m, c] : x.terms()) out.add(arnold_image(f, m), c);
  return out;
}

OSElement single(const OSMonomial& m, std::size_t level) {
  OSElement out(level, m.degree());
  out.add(m, Rational(1));
  return out;
}

}  // namespace

TEST_SUITE("arnold") {

TEST_CASE("straightening") {
  CHECK(straighten({{1, 2}, {1, 2}}, 3).is_zero());
  CHECK(straighten({{1, 3}, {1, 2}}, 3).str() == "-1 * w(1,2)w(1,3)");
  CHECK(straighten({{1, 3}, {2, 3}}, 3).str() == "-1 * w(1,2)w(1,3) + 1 * w(1,2)w(2,3)");
  CHECK(straighten({{3, 1}}, 3).str() == "1 * w(1,3)");
  CHECK(straighten({}, 2).str() == "1 * 1");
  // The Arnold relation itself straightens to zero.
  OSElement rel = straighten({{1, 2}, {2, 3}}, 3);
  rel.add(straighten({{2, 3}, {3, 1}}, 3), Rational(1));
  rel.add(straighten({{3, 1}, {1, 2}}, 3), Rational(1));
  CHECK(rel.is_zero());
  // Degree above n - 1 always vanishes.
  CHECK(straighten({{1, 2}, {1, 3}, {2, 3}}, 3).is_zero());
  CHECK_THROWS_AS(straighten({{1, 4}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(straighten({{2, 2}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(straighten({{0, 1}}, 3), std::invalid_argument);
}

TEST_CASE("admissible basis and dimensions") {
  const auto b = admissible_basis(1, 3);
  REQUIRE(b.size() == 3);
  CHECK(b[0].str() == "w(1,2)");
  CHECK(b[1].str() == "w(1,3)");
  CHECK(b[2].str() == "w(2,3)");
  for (const auto& m : admissible_basis(2, 5)) {
    CHECK(m.admissible());
    CHECK(straighten(m.pairs, 5) == single(m, 5));
  }
  CHECK(admissible_basis(0, 0).size() == 1);
  CHECK(arnold_dim(1, 3) == 3);
  CHECK(arnold_dim(2, 4) == 11);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t i = n; i <= 8; ++i) CHECK(arnold_dim(i, n) == 0);
    for (std::size_t i = 0; i <= 7; ++i) CHECK(static_cast<long>(arnold_dim(i, n)) == stirling_oracle(i, n));
  }
  CHECK(!OSMonomial{{{2, 3}, {1, 3}}}.admissible());
}

TEST_CASE("generator action") {
  const CatModule h0 = arnold_module(0, 5);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(h0.dim(n) == 1);
  for (const NMor& f : enumerate_hom(Category::F, 3, 2)) CHECK(h0.act(f) == Matrix{{1}});

  const OSMonomial w12{{{1, 2}}};
  CHECK(arnold_image(SetMap(3, {2, 3}), w12).str() == "1 * w(2,3)");
  CHECK(arnold_image(SetMap(1, {1, 1}), w12).is_zero());
  CHECK(arnold_image(SetMap(2, {2, 1}), w12).str() == "1 * w(1,2)");

  const CatModule h1 = arnold_module(1, 5);
  CHECK(h1.act(lift(SetMap(3, {2, 3}), LiftMode::Canonical)) == Matrix{{0}, {0}, {1}});
  CHECK(h1.act(lift(SetMap(1, {1, 1}), LiftMode::Canonical)).rows() == 0);
  CHECK(generation_degree(h1).degree == 2);
  CHECK(verify_generation(h1, generation_degree(h1)));
}

TEST_CASE("functoriality for i <= 2") {
  for (std::size_t i = 0; i <= 2; ++i) {
    const CatModule v = arnold_module(i, 6);
    CAPTURE(i);
    CHECK(check_functoriality_exhaustive(v, 4).pass);
    const FunctorialityReport r = check_functoriality(v, 500, 11 + i);
    CHECK(r.pass);
    CHECK(r.pairs_checked == 500);
  }
}

TEST_CASE("the action is a ring map") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 2 + uniform_below(rng, 4), cod = 1 + uniform_below(rng, 5);
    const std::size_t i = uniform_below(rng, n), j = uniform_below(rng, n - i);
    const auto bx = admissible_basis(i, n), by = admissible_basis(j, n);
    const OSElement x = single(bx[uniform_below(rng, bx.size())], n);
    const OSElement y = single(by[uniform_below(rng, by.size())], n);
    const SetMap f = random_morphism(Category::F, n, cod, rng).map();
    CHECK(image(f, product(x, y)) == product(image(f, x), image(f, y)));
    ++checked;
  }
}

TEST_CASE("degree one is the module C2") {
  const CatModule h1 = restrict_module(arnold_module(1, 4), Restriction::Phi);
  const CatModule c2 = make_simple(SimpleSpec::C(2), 4);
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n)
      if (hom_count(Category::N, m, n) > 0)
        for (const NMor& f : enumerate_hom(Category::N, m, n)) CHECK(h1.act(f) == c2.act(f));
}

TEST_CASE("descent and polynomial growth") {
  for (std::size_t i = 0; i <= 2; ++i)
    CHECK(descends_through_phi(restrict_module(arnold_module(i, 5), Restriction::Phi), 5).pass);
  for (std::size_t i = 1; i <= 2; ++i) {
    std::vector<Rational> seq;
    for (std::size_t n = 1; n <= 8; ++n) seq.push_back(Rational(static_cast<long>(arnold_dim(i, n))));
    const DimensionFit fit = fit_dimension_polynomial(seq, 2 * i);
    REQUIRE(fit.ok());
    CHECK(fit.polynomial->degree() == static_cast<int>(2 * i));
    CHECK(!fit_dimension_polynomial(seq, 2 * i - 1).ok());
  }
  const CharacterFit chi =
      fit_character_polynomial(arnold_module(1, 8), 2, {2, 3, 4, 5, 6}, {7, 8});
  REQUIRE(chi.ok());
  CHECK(chi.polynomial->str() == "C(X1,2) + X2");
}

TEST_CASE("OS element text form") {
  const OSElement e = parse_os_element("2 * w(2,3)w(1,3) + -1/2 * w(1,2)w(1,3)", 3);
  // w(2,3)w(1,3) = -w(1,3)w(2,3) = w(1,2)w(1,3) - w(1,2)w(2,3)
  CHECK(e.str() == "3/2 * w(1,2)w(1,3) + -2 * w(1,2)w(2,3)");
  CHECK(parse_os_element(e.str(), 3) == e);
  CHECK(parse_os_element("3 * 1", 4).str() == "3 * 1");
  CHECK(parse_os_element("1 * w(1,2) + -1 * w(2,1)", 2).is_zero());
  CHECK_THROWS_AS(parse_os_element("w(1,2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_os_element("1 * w(1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_os_element("1 * w(1,2) + 1 * w(1,2)w(1,3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_os_element("1 * w(1,5)", 3), std::invalid_argument);
}

}
