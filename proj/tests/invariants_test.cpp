#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ncfin/arnold.hpp"
#include "ncfin/invariants.hpp"
#include "ncfin/simples.hpp"

using namespace ncfin;

namespace {

// (1/n!) times the sum of V(sigma) over all of S_n.
Matrix brute_force_average(const CatModule& v, std::size_t n) {
  Matrix sum(v.dim(n), v.dim(n));
  std::vector<std::size_t> values(n);
  std::iota(values.begin(), values.end(), 1);
  long count = 0;
  do {
    sum += v.act(lift(SetMap(n, values), LiftMode::Injection));
    ++count;
  } while (std::next_permutation(values.begin(), values.end()));
  return sum * (Rational(1) / Rational(count));
}

std::vector<CatModule> fixtures() {
  return {make_simple(SimpleSpec::C(1), 5), make_simple(SimpleSpec::C(2), 5), make_simple(SimpleSpec::C(3), 5),
          make_simple(SimpleSpec::D1(), 5), arnold_module(1, 5),            arnold_module(2, 5)};
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("averaging projector") {
  for (const CatModule& v : fixtures())
    for (std::size_t n = 0; n <= 5; ++n) {
      const Matrix p = averaging_projector(v, n);
      CHECK(p * p == p);
      CHECK(p == brute_force_average(v, n));
      const InvariantBasis inv = invariants_basis(v, n);
      CHECK(inv.dim() == rank(p));
      // Columns are fixed by every adjacent transposition.
      for (std::size_t i = 1; i + 1 <= n; ++i) CHECK(v.act(transposition(n, i)) * inv.basis == inv.basis);
      // Coinvariants V / span{(sigma - 1)v} have the same dimension.
      Matrix relations(v.dim(n), 0);
      for (std::size_t i = 1; i + 1 <= n; ++i)
        relations = hstack(relations, v.act(transposition(n, i)) - Matrix::identity(v.dim(n)));
      CHECK(v.dim(n) - rank(relations) == inv.dim());
    }
}

TEST_CASE("invariant dimensions of the simples") {
  const CatModule c2 = make_simple(SimpleSpec::C(2), 6);
  const InvariantBasis at4 = invariants_basis(c2, 4);
  REQUIRE(at4.dim() == 1);
  // Spanned by the sum of all 2-subsets.
  Matrix ones(6, 1);
  for (std::size_t r = 0; r < 6; ++r) ones(r, 0) = 1;
  CHECK(rank(hstack(at4.basis, ones)) == 1);
  CHECK(invariants_basis(c2, 1).dim() == 0);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(invariants_basis(make_simple(SimpleSpec::D1(), 6), n).dim() == 1);
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 0; n <= 6; ++n)
      CHECK(invariants_basis(make_simple(SimpleSpec::C(k), 6), n).dim() == (n >= k ? 1u : 0u));
  CHECK_THROWS_AS(invariants_basis(restrict_module(c2, Restriction::Psi), 3), std::invalid_argument);
  CHECK_THROWS_AS(invariants_basis(c2, 7), std::out_of_range);
}

TEST_CASE("barred maps") {
  const CatModule c2 = make_simple(SimpleSpec::C(2), 5);
  const Matrix inj = barred_map(c2, SetMap(3, {1, 2}));
  CHECK(inj.rows() == 1);
  CHECK(inj.cols() == 1);
  CHECK(!inj.is_zero());
  const Matrix collapse = barred_map(c2, SetMap(1, {1, 1}));
  CHECK(collapse.rows() == 0);
  CHECK(collapse.cols() == 1);

  const CatModule d1 = make_simple(SimpleSpec::D1(), 5);
  for (const NMor& f : enumerate_hom(Category::N, 3, 2)) CHECK(barred_map(d1, f) == Matrix{{1}});
}

TEST_CASE("barred maps do not depend on the lift") {
  std::vector<CatModule> modules = {make_simple(SimpleSpec::C(1), 4), make_simple(SimpleSpec::C(2), 4),
                                    restrict_module(arnold_module(1, 4), Restriction::Phi)};
  for (const CatModule& v : modules)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; n <= 4; ++n)
        for (const NMor& f : enumerate_hom(Category::N, m, n))
          CHECK(barred_map(v, f) == barred_map(v, lift(forget(f), LiftMode::Canonical)));
}

TEST_CASE("monotonicity") {
  const MonotonicityReport c3 = monotonicity_check(make_simple(SimpleSpec::C(3), 7), 1, 7);
  CHECK(c3.pass);
  CHECK(c3.dims.front() == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(c3.dims.back() == std::pair<std::size_t, std::size_t>{7, 1});
  CHECK(c3.str().find("nondecreasing: yes") != std::string::npos);

  const MonotonicityReport h1 = monotonicity_check(arnold_module(1, 7), 1, 7);
  CHECK(h1.pass);
  CHECK(h1.dims[0].second == 0);
  for (std::size_t j = 1; j < h1.dims.size(); ++j) CHECK(h1.dims[j].second == 1);
  const MonotonicityReport h2 = monotonicity_check(arnold_module(2, 7), 1, 7);
  CHECK(h2.pass);
  for (const auto& [n, d] : h2.dims) CHECK(d == 0);

  // Sums of fixtures stay nondecreasing.
  const CatModule sum = direct_sum(direct_sum(make_simple(SimpleSpec::C(1), 6), make_simple(SimpleSpec::C(3), 6)),
                                   restrict_module(arnold_module(1, 6), Restriction::Phi));
  CHECK(monotonicity_check(sum, 1, 6).pass);

  // A dimension drop is reported.
  const CatModule drop = CatModule::from_rule(Category::N, 2, {0, 1, 0}, [](const NMor& f) {
    return f.dom() == 1 && f.cod() == 1 ? Matrix{{1}} : Matrix(f.cod() == 1 ? 1 : 0, f.dom() == 1 ? 1 : 0);
  });
  const MonotonicityReport bad = monotonicity_check(drop, 1, 2);
  CHECK(!bad.pass);
  CHECK(bad.str() == "n=1 dim=1\nn=2 dim=0\nnondecreasing: no\n");
  CHECK_THROWS_AS(monotonicity_check(make_simple(SimpleSpec::C(1), 3), 0, 3), std::out_of_range);
}

TEST_CASE("replication") {
  CHECK(replication_map(2, 3).values() == std::vector<std::size_t>{1, 1, 1, 2, 2, 2});
  CHECK_THROWS_AS(replication_map(0, 2), std::invalid_argument);

  const ReplicationReport c2 = replication_iso_check(make_simple(SimpleSpec::C(2), 4), 2, 2);
  CHECK(c2.pass);
  CHECK(c2.barred.rows() == 1);
  CHECK(c2.barred.cols() == 1);

  // The invariant sum of all w(a,b) in H^1 of [4] maps to 4 w(1,2).
  const CatModule h1 = arnold_module(1, 6);
  Matrix all(h1.dim(4), 1);
  for (std::size_t r = 0; r < all.rows(); ++r) all(r, 0) = 1;
  CHECK(h1.act(lift(replication_map(2, 2), LiftMode::Canonical)) * all == Matrix{{4}});
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    const ReplicationReport r = replication_iso_check(h1, n, m);
    CHECK(r.pass);
    CHECK(r.str().find("invertible") != std::string::npos);
  }

  // Collapsing [4] onto [2] kills every 3-subset, and C3 has no invariants at [2].
  const ReplicationReport c3 = replication_iso_check(make_simple(SimpleSpec::C(3), 4), 2, 2);
  CHECK(!c3.pass);
  CHECK(c3.barred.rows() == 0);
  CHECK(c3.barred.cols() == 1);
  CHECK(c3.str() == "replication n=2 m=2: 0x1 not invertible");
  CHECK_THROWS_AS(replication_iso_check(h1, 3, 3), std::out_of_range);
}

}
