#include "doctest.h"
#include "ncfin/module.hpp"
#include "ncfin/simples.hpp"

using namespace ncfin;

namespace {

// Every morphism of the module's category with both ends <= up_to.
template <typename Fn>
void for_each_morphism(const CatModule& v, std::size_t up_to, Fn fn) {
  for (std::size_t m = v.min_level(); m <= up_to; ++m)
    for (std::size_t n = v.min_level(); n <= up_to; ++n)
      if (hom_count(v.category(), m, n) > 0)
        for (const NMor& f : enumerate_hom(v.category(), m, n)) fn(f);
}

}  // namespace

TEST_SUITE("repmod") {

TEST_CASE("identity and the subset action") {
  const CatModule c2 = make_simple(SimpleSpec::C(2), 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(c2.act(NMor::identity(n)) == Matrix::identity(c2.dim(n)));

  // {1,2} in [2] goes to {1,2} in [3], the first 2-subset in lexicographic order.
  const Matrix inj = c2.act(lift(SetMap(3, {1, 2}), LiftMode::Injection));
  CHECK(inj == Matrix{{1}, {0}, {0}});
  CHECK(c2.act(lift(SetMap(1, {1, 1}), LiftMode::Canonical)).is_zero());
  CHECK(c2.act(lift(SetMap(1, {1, 1}), LiftMode::Canonical)).rows() == 0);
}

TEST_CASE("act rejects bad input") {
  const CatModule c1 = make_simple(SimpleSpec::C(1), 3);
  CHECK_THROWS_AS(c1.act(NMor::identity(4)), std::out_of_range);
  const CatModule f1 = subset_module_f(1, 3);
  CHECK_THROWS_AS(f1.act(parse_morphism("2->1: 1,1 | orders: 1:(2,1)")), std::invalid_argument);
  const CatModule d = restrict_module(c1, Restriction::Psi);
  CHECK_THROWS_AS(d.act(lift(SetMap(2, {2, 1}), LiftMode::Injection)), std::invalid_argument);
  CHECK_THROWS_AS(d.act(NMor::identity(0)), std::invalid_argument);
  CHECK_THROWS_AS(CatModule::from_rule(Category::N, 2, {1, 1}, [](const NMor&) { return Matrix(); }),
                  std::invalid_argument);
  const CatModule bad = CatModule::from_rule(Category::N, 2, {1, 1, 1}, [](const NMor&) { return Matrix(2, 2); });
  CHECK_THROWS_AS(bad.act(NMor::identity(1)), std::logic_error);
}

TEST_CASE("functoriality of the fixture modules") {
  const CatModule c2 = make_simple(SimpleSpec::C(2), 6);
  FunctorialityReport random = check_functoriality(c2, 500, 1);
  CHECK(random.pass);
  CHECK(!random.exhaustive);
  CHECK(random.pairs_checked == 500);

  for (const CatModule& v : {make_simple(SimpleSpec::C(1), 4), make_simple(SimpleSpec::C(2), 4),
                             make_simple(SimpleSpec::C(3), 4), make_simple(SimpleSpec::D0(), 4),
                             make_simple(SimpleSpec::D1(), 4), subset_module_f(2, 4),
                             representable(Category::FI, 1, 4), representable(Category::Delta, 2, 4)}) {
    FunctorialityReport all = check_functoriality_exhaustive(v, 4);
    CHECK(all.pass);
    CHECK(all.exhaustive);
    CHECK(all.counterexample.empty());
  }
}

TEST_CASE("a corrupted generator matrix is caught") {
  const CatModule c2 = tabulate(make_simple(SimpleSpec::C(2), 4));
  auto blocks = c2.elementary_blocks();
  const auto gens = elementary_generators(Category::N, 4);
  std::size_t target = 0;
  while (gens[target].kind != ElementaryKind::Coface || blocks[target].rows() < 3) ++target;
  blocks[target](0, 0) += Rational(1);
  const CatModule broken = CatModule::from_elementary(Category::N, 4, c2.dims(), blocks);
  FunctorialityReport rep = check_functoriality(broken, 500, 9);
  CHECK(!rep.pass);
  CHECK(!rep.counterexample.empty());
  CHECK(!check_functoriality_exhaustive(broken, 4).pass);
}

TEST_CASE("tabulated modules agree with their rules") {
  for (const CatModule& v : {make_simple(SimpleSpec::C(2), 4), subset_module_f(1, 4),
                             representable(Category::FI, 2, 4), representable(Category::Delta, 1, 4)}) {
    const CatModule t = tabulate(v);
    CHECK(t.has_elementary_backend());
    for_each_morphism(v, 4, [&](const NMor& f) { CHECK(t.act(f) == v.act(f)); });
  }
}

TEST_CASE("restriction along psi and phi") {
  const CatModule c1 = make_simple(SimpleSpec::C(1), 6);
  const CatModule d = restrict_module(c1, Restriction::Psi);
  CHECK(d.category() == Category::Delta);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(d.dim(n) == n);

  const CatModule d1 = restrict_module(make_simple(SimpleSpec::D1(), 5), Restriction::Psi);
  for_each_morphism(d1, 5, [&](const NMor& f) { CHECK(d1.act(f) == Matrix{{1}}); });

  const CatModule c2 = make_simple(SimpleSpec::C(2), 4);
  const CatModule c2d = restrict_module(c2, Restriction::Psi);
  for_each_morphism(c2d, 4, [&](const NMor& f) { CHECK(c2d.act(f) == c2.act(f)); });

  const CatModule w = restrict_module(subset_module_f(2, 4), Restriction::Phi);
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      if (hom_count(Category::N, m, n) > 0)
        for (const NMor& f : enumerate_hom(Category::N, m, n))
          CHECK(w.act(f) == w.act(lift(forget(f), LiftMode::Canonical)));

  CHECK_THROWS_AS(restrict_module(d, Restriction::Psi), std::invalid_argument);
  CHECK_THROWS_AS(restrict_module(c1, Restriction::Phi), std::invalid_argument);
}

TEST_CASE("generation degree") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const CatModule ck = make_simple(SimpleSpec::C(k), 6);
    const GenerationCertificate cert = generation_degree(ck);
    CHECK(cert.degree == k);
    CHECK(cert.certified);
    CHECK(verify_generation(ck, cert));
  }
  const CatModule d1 = make_simple(SimpleSpec::D1(), 6);
  CHECK(generation_degree(d1).degree == 1);

  const CatModule sum = direct_sum(make_simple(SimpleSpec::C(1), 6), make_simple(SimpleSpec::C(2), 6));
  const GenerationCertificate cert = generation_degree(sum);
  CHECK(cert.degree == 2);
  CHECK(verify_generation(sum, cert));

  // A certificate that claims too little fails verification.
  GenerationCertificate forged = cert;
  forged.witnesses[4].pop_back();
  CHECK(!verify_generation(sum, forged));

  // Only the top level spans: not certified.
  const CatModule c3 = make_simple(SimpleSpec::C(3), 3);
  CHECK(!generation_degree(c3).certified);
}

TEST_CASE("direct sums") {
  const CatModule dd = direct_sum(make_simple(SimpleSpec::D1(), 5), make_simple(SimpleSpec::D1(), 5));
  CHECK(dd.dim(0) == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(dd.dim(n) == 2);

  const CatModule c1 = make_simple(SimpleSpec::C(1), 4), c2 = make_simple(SimpleSpec::C(2), 4);
  const CatModule s = direct_sum(c1, c2);
  const NMor f = parse_morphism("3->4: 4,1,1 | orders: 1:(3,2)");
  CHECK(s.act(f) == block_diagonal(c1.act(f), c2.act(f)));
  CHECK(check_functoriality_exhaustive(s, 3).pass);
  CHECK_THROWS_AS(direct_sum(c1, make_simple(SimpleSpec::C(1), 5)), std::invalid_argument);
}

TEST_CASE("representable and constant modules") {
  for (Category cat : {Category::N, Category::F, Category::FI, Category::Delta}) {
    const CatModule rep = representable(cat, 2, 4);
    for (std::size_t n = rep.min_level(); n <= 4; ++n)
      CHECK(mpz_class(static_cast<unsigned long>(rep.dim(n))) == hom_count(cat, 2, n));
    const CatModule one = constant_module(cat, 4);
    for_each_morphism(one, 3, [&](const NMor& f) { CHECK(one.act(f) == Matrix{{1}}); });
  }
  // Polynomial growth of Q[Delta([q], -)]: dim <= C(n+q-1, q).
  for (std::size_t q = 1; q <= 3; ++q) {
    const CatModule rep = representable(Category::Delta, q, 8);
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(Rational(static_cast<long>(rep.dim(n))) <= binomial(static_cast<long>(n + q - 1), static_cast<long>(q)));
  }
}

TEST_CASE("catmod/1 round trip and errors") {
  for (const CatModule& v : {make_simple(SimpleSpec::C(2), 4), make_simple(SimpleSpec::D0(), 3),
                             representable(Category::Delta, 2, 4), subset_module_f(1, 3),
                             representable(Category::FI, 1, 3)}) {
    const std::string text = write_catmod(v);
    const CatModule back = read_catmod(text);
    CHECK(write_catmod(back) == text);
    CHECK(back.category() == v.category());
    CHECK(back.dims() == v.dims());
    for_each_morphism(v, std::min<std::size_t>(v.max_level(), 3), [&](const NMor& f) { CHECK(back.act(f) == v.act(f)); });
  }
  const std::string text = write_catmod(make_simple(SimpleSpec::C(1), 2));
  CHECK(text.rfind("catmod/1\ncategory N\nmax 2\ndims 0 1 2\n", 0) == 0);
  CHECK_THROWS_AS(read_catmod("catmod/2\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_catmod(text.substr(0, text.size() - 4)), std::invalid_argument);
  std::string bad = text;
  bad.replace(bad.find("dims 0 1 2"), 10, "dims 0 1 3");
  CHECK_THROWS_AS(read_catmod(bad), std::invalid_argument);
  try {
    std::string garbled = text;
    garbled.replace(garbled.find("category N"), 10, "category Q");
    read_catmod(garbled);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

}
