#include "doctest.h"
#include "ncfin/doldkan.hpp"
#include "ncfin/simples.hpp"

using namespace ncfin;

namespace {

std::vector<std::size_t> leading(const std::vector<std::size_t>& dims, std::size_t count) {
  std::vector<std::size_t> out(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(std::min(count, dims.size())));
  out.resize(count, 0);
  return out;
}

// Multiplicities m_p from dim V[1..N] by forward differences at n = 1.
std::vector<long> newton_multiplicities(const CatModule& v) {
  std::vector<long> diffs;
  for (std::size_t n = 1; n <= v.max_level(); ++n) diffs.push_back(static_cast<long>(v.dim(n)));
  std::vector<long> out;
  while (!diffs.empty()) {
    out.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return out;
}

CochainComplex two_term(const Matrix& d) {
  CochainComplex c;
  c.dims = {d.cols(), d.rows()};
  c.differentials = {d};
  return c;
}

}  // namespace

TEST_SUITE("doldkan") {

TEST_CASE("conormalization of small Delta-modules") {
  CHECK(leading(conormalize(constant_module(Category::Delta, 6)).dims, 4) == std::vector<std::size_t>{1, 0, 0, 0});
  const CatModule c1 = restrict_module(make_simple(SimpleSpec::C(1), 6), Restriction::Psi);
  CHECK(leading(conormalize(c1).dims, 4) == std::vector<std::size_t>{1, 1, 0, 0});

  // C(n,2) = C(n-1,1) + C(n-1,2), so the complex is (0,1,1).
  const CatModule c2 = restrict_module(make_simple(SimpleSpec::C(2), 6), Restriction::Psi);
  const CochainComplex n2 = conormalize(c2);
  CHECK(leading(n2.dims, 4) == std::vector<std::size_t>{0, 1, 1, 0});
  const auto oracle = newton_multiplicities(c2);
  for (std::size_t p = 0; p < n2.dims.size(); ++p) CHECK(static_cast<long>(n2.dims[p]) == oracle[p]);
  CHECK_NOTHROW(n2.validate());

  CHECK_THROWS_AS(conormalize(make_simple(SimpleSpec::C(1), 3)), std::invalid_argument);
}

TEST_CASE("Eilenberg-MacLane modules") {
  const CatModule k0 = realize(shifted_unit(0), 6);
  const CatModule one = constant_module(Category::Delta, 6);
  CHECK(k0.dims() == one.dims());
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (const NMor& f : enumerate_hom(Category::Delta, m, n)) CHECK(k0.act(f) == one.act(f));

  CHECK(realize(shifted_unit(2), 6).dim(4) == 3);
  for (std::size_t p = 0; p <= 4; ++p) {
    const CatModule k = realize(shifted_unit(p), 10);
    for (std::size_t n = 1; n <= 10; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(Rational(static_cast<long>(k.dim(n))) == binomial(static_cast<long>(n - 1), static_cast<long>(p)));
      if (n <= p) CHECK(k.dim(n) == 0);
    }
  }
}

TEST_CASE("realized modules are functors and round-trip") {
  const std::vector<CochainComplex> complexes = {
      two_term(Matrix{{1, 2}, {2, 4}}),
      two_term(Matrix{{1, 0, -1}}),
      [] {
        CochainComplex c;
        c.dims = {1, 2, 1};
        c.differentials = {Matrix{{1}, {1}}, Matrix{{1, -1}}};
        return c;
      }(),
      [] {
        CochainComplex c;
        c.dims = {2, 0, 3, 1};
        c.differentials = {Matrix(0, 2), Matrix(3, 0), Matrix{{2, -1, 0}}};
        return c;
      }(),
  };
  for (const CochainComplex& c : complexes) {
    c.validate();
    const CatModule v = realize(c, c.top() + 2);
    CHECK(check_functoriality_exhaustive(v, std::min<std::size_t>(v.max_level(), 4)).pass);
    const CochainComplex back = conormalize(v);
    CHECK_NOTHROW(back.validate());
    for (std::size_t p = 0; p <= c.top(); ++p) CHECK(back.dims[p] == c.dims[p]);
    for (std::size_t p = 0; p < c.differentials.size(); ++p)
      CHECK(rank(back.differentials[p]) == rank(c.differentials[p]));
    for (std::size_t n = 1; n <= v.max_level(); ++n) {
      Rational expected;
      for (std::size_t p = 0; p <= c.top(); ++p)
        expected += Rational(static_cast<long>(c.dims[p])) * binomial(static_cast<long>(n - 1), static_cast<long>(p));
      CHECK(Rational(static_cast<long>(v.dim(n))) == expected);
    }
  }
}

TEST_CASE("dimension polynomials") {
  const DimPolynomial p1 = dim_polynomial(restrict_module(make_simple(SimpleSpec::C(1), 6), Restriction::Psi));
  CHECK(p1.str() == "C(n-1,0) + C(n-1,1)");
  CHECK(p1.expand() == Polynomial({0, 1}));

  const DimPolynomial p2 = dim_polynomial(restrict_module(make_simple(SimpleSpec::C(2), 6), Restriction::Psi));
  CHECK(p2.expand() == Polynomial({0, Rational(-1, 2), Rational(1, 2)}));
  CHECK(p2.expand().str() == "1/2*n^2 - 1/2*n");

  const DimPolynomial p0 = dim_polynomial(constant_module(Category::Delta, 5));
  CHECK(p0.expand() == Polynomial({1}));
  CHECK(p0(7) == Rational(1));

  // Levels that disagree with any Dold-Kan count.
  const CatModule fake = CatModule::from_rule(Category::Delta, 3, {0, 1, 1, 1}, [](const NMor& f) {
    Matrix m(1, 1);
    if (f.dom() == f.cod()) m(0, 0) = 1;
    return m;
  });
  CHECK_THROWS_AS(dim_polynomial(fake), std::runtime_error);
}

TEST_CASE("inconsistent cofaces are reported") {
  const NMor bad_face = coface(1, 2);
  const CatModule v = CatModule::from_rule(Category::Delta, 2, {0, 1, 1}, [bad_face](const NMor& f) {
    Matrix m(1, 1);
    m(0, 0) = f == bad_face ? 0 : 1;
    return m;
  });
  CHECK_THROWS_AS(conormalize(v), std::runtime_error);
}

TEST_CASE("cochain/1 round trip and validation") {
  CochainComplex c;
  c.dims = {1, 2, 1};
  c.differentials = {Matrix{{1}, {1}}, Matrix{{Rational(1, 2), Rational(-1, 2)}}};
  const std::string text = write_cochain(c);
  CHECK(text == "cochain/1\ntop 2\ndims 1 2 1\ndifferential 0 2x1\n1\n1\ndifferential 1 1x2\n1/2 -1/2\nend\n");
  const CochainComplex back = read_cochain(text);
  CHECK(back.dims == c.dims);
  CHECK(back.differentials == c.differentials);
  CHECK(write_cochain(shifted_unit(3)) == "cochain/1\ntop 3\ndims 0 0 0 1\ndifferential 0 0x0\ndifferential 1 0x0\n"
                                          "differential 2 1x0\n\nend\n");
  CHECK(write_cochain(read_cochain(write_cochain(shifted_unit(3)))) == write_cochain(shifted_unit(3)));

  CochainComplex bad = c;
  bad.differentials[1] = Matrix{{1, 1}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(read_cochain(write_cochain(bad)), std::invalid_argument);
  CHECK_THROWS_AS(read_cochain("cochain/1\ntop 1\ndims 1\nend\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_cochain("chain/1\n"), std::invalid_argument);
}

}
