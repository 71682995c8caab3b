#include "ncfin/acceptance.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ncfin/arnold.hpp"
#include "ncfin/catcore.hpp"
#include "ncfin/characters.hpp"
#include "ncfin/doldkan.hpp"
#include "ncfin/invariants.hpp"
#include "ncfin/module.hpp"
#include "ncfin/simples.hpp"

namespace ncfin {

namespace {

constexpr Category kCategories[] = {Category::Delta, Category::N, Category::F, Category::FI};

std::size_t lowest_object(Category cat) { return cat == Category::Delta ? 1 : 0; }

// Pascal's triangle, kept apart from Rational's binomial so it can serve as an oracle.
std::uint64_t pascal(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (std::size_t j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

mpz_class hom_size_oracle(Category cat, std::size_t m, std::size_t n) {
  mpz_class out = 1;
  switch (cat) {
    case Category::N:
      for (std::size_t j = 0; j < m; ++j) out *= static_cast<unsigned long>(n + j);
      return out;
    case Category::F:
      for (std::size_t j = 0; j < m; ++j) out *= static_cast<unsigned long>(n);
      return out;
    case Category::Delta:
      return static_cast<unsigned long>(pascal(n + m - 1, m));
    case Category::FI:
      for (std::size_t j = 0; j < m; ++j) out *= static_cast<unsigned long>(n >= j ? n - j : 0);
      return out;
  }
  return 0;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

// ---------------------------------------------------------------------------

CriterionResult hom_counts() {
  CriterionResult r{1, "hom counts", true, ""};
  std::size_t sets = 0;
  for (Category cat : kCategories)
    for (std::size_t m = lowest_object(cat); m <= 5; ++m)
      for (std::size_t n = lowest_object(cat); n <= 5; ++n) {
        ++sets;
        const mpz_class expected = hom_size_oracle(cat, m, n);
        const std::size_t listed = enumerate_hom(cat, m, n).size();
        if (mpz_class(static_cast<unsigned long>(listed)) != expected || hom_count(cat, m, n) != expected) {
          r.pass = false;
          r.detail = std::string(category_name(cat)) + " Hom([" + std::to_string(m) + "],[" + std::to_string(n) +
                     "]): enumerated " + std::to_string(listed) + ", expected " + expected.get_str();
          return r;
        }
      }
  r.detail = std::to_string(sets) + " hom-sets, m,n <= 5, all four categories";
  return r;
}

// Composition tables for all objects <= up_to: every composable pair is
// composed once, so exhaustive associativity becomes index lookups.
class CompositionTables {
 public:
  CompositionTables(Category cat, std::size_t up_to) : cat_(cat), lo_(lowest_object(cat)), size_(up_to + 1) {
    homs_.resize(size_ * size_);
    index_.resize(size_ * size_);
    for (std::size_t a = lo_; a < size_; ++a)
      for (std::size_t b = lo_; b < size_; ++b) {
        homs_[a * size_ + b] = enumerate_hom(cat, a, b);
        auto& idx = index_[a * size_ + b];
        for (std::size_t k = 0; k < homs_[a * size_ + b].size(); ++k) idx.emplace(homs_[a * size_ + b][k], k);
      }
    tables_.resize(size_ * size_ * size_);
    for (std::size_t a = lo_; a < size_; ++a)
      for (std::size_t b = lo_; b < size_; ++b)
        for (std::size_t c = lo_; c < size_; ++c) build(a, b, c);
  }

  const std::vector<NMor>& hom(std::size_t a, std::size_t b) const { return homs_[a * size_ + b]; }
  const std::vector<std::uint32_t>& table(std::size_t a, std::size_t b, std::size_t c) const {
    return tables_[(a * size_ + b) * size_ + c];
  }
  std::size_t pairs() const { return pairs_; }
  const std::string& failure() const { return failure_; }

 private:
  void build(std::size_t a, std::size_t b, std::size_t c) {
    const auto& fs = hom(a, b);
    const auto& gs = hom(b, c);
    const auto& target = index_[a * size_ + c];
    auto& t = tables_[(a * size_ + b) * size_ + c];
    t.resize(gs.size() * fs.size());
    for (std::size_t g = 0; g < gs.size(); ++g)
      for (std::size_t f = 0; f < fs.size(); ++f) {
        ++pairs_;
        const NMor gf = compose_in(cat_, gs[g], fs[f]);
        auto it = target.find(gf);
        if (it == target.end()) {
          note("composite leaves the category: " + format_morphism(gs[g]) + " o " + format_morphism(fs[f]));
          t[g * fs.size() + f] = 0;
          continue;
        }
        t[g * fs.size() + f] = static_cast<std::uint32_t>(it->second);
        // phi: forgetting orders commutes with composition.
        if (forget(gf) != compose(forget(gs[g]), forget(fs[f])))
          note("phi fails on " + format_morphism(gs[g]) + " o " + format_morphism(fs[f]));
        // psi: the lift of a monotone composite is the composite of the lifts.
        if (cat_ == Category::Delta && gf != lift(compose(forget(gs[g]), forget(fs[f])), LiftMode::Delta))
          note("psi fails on " + format_morphism(gs[g]) + " o " + format_morphism(fs[f]));
      }
  }

  void note(const std::string& what) {
    if (failure_.empty()) failure_ = what;
  }

  Category cat_;
  std::size_t lo_;
  std::size_t size_;
  std::vector<std::vector<NMor>> homs_;
  std::vector<std::unordered_map<NMor, std::size_t, NMorHash>> index_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::size_t pairs_ = 0;
  std::string failure_;
};

struct LawCount {
  std::size_t triples = 0;
  std::string failure;
};

LawCount exhaustive_associativity(Category cat, std::size_t up_to) {
  CompositionTables t(cat, up_to);
  LawCount out;
  out.failure = t.failure();
  const std::size_t lo = lowest_object(cat);
  for (std::size_t a = lo; a <= up_to && out.failure.empty(); ++a)
    for (std::size_t b = lo; b <= up_to; ++b)
      for (std::size_t c = lo; c <= up_to; ++c)
        for (std::size_t d = lo; d <= up_to; ++d) {
          const std::size_t nf = t.hom(a, b).size(), ng = t.hom(b, c).size(), nh = t.hom(c, d).size();
          const std::size_t nac = t.hom(a, c).size(), nbd = t.hom(b, d).size();
          const auto& abc = t.table(a, b, c);
          const auto& bcd = t.table(b, c, d);
          const auto& acd = t.table(a, c, d);
          const auto& abd = t.table(a, b, d);
          for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t f = 0; f < nf; ++f) {
              const std::uint32_t gf = abc[g * nf + f];
              for (std::size_t h = 0; h < nh; ++h) {
                const std::uint32_t hg = bcd[h * ng + g];
                if (acd[h * nac + gf] != abd[hg * nf + f]) {
                  out.failure = "associativity fails on " + format_morphism(t.hom(c, d)[h]) + " o " +
                                format_morphism(t.hom(b, c)[g]) + " o " + format_morphism(t.hom(a, b)[f]);
                  return out;
                }
              }
            }
          out.triples += nf * ng * nh;
          (void)nbd;
        }
  // Identity laws on every listed morphism.
  for (std::size_t a = lo; a <= up_to; ++a)
    for (std::size_t b = lo; b <= up_to; ++b)
      for (const NMor& f : t.hom(a, b))
        if (compose_in(cat, f, NMor::identity(a)) != f || compose_in(cat, NMor::identity(b), f) != f) {
          out.failure = "identity law fails on " + format_morphism(f);
          return out;
        }
  return out;
}

LawCount random_associativity(Category cat, std::size_t up_to, std::size_t trials, std::mt19937_64& rng) {
  LawCount out;
  const std::size_t lo = lowest_object(cat);
  while (out.triples < trials) {
    std::size_t s[4];
    for (auto& x : s) x = lo + uniform_below(rng, up_to + 1 - lo);
    if (hom_count(cat, s[0], s[1]) == 0 || hom_count(cat, s[1], s[2]) == 0 || hom_count(cat, s[2], s[3]) == 0) continue;
    const NMor f = random_morphism(cat, s[0], s[1], rng);
    const NMor g = random_morphism(cat, s[1], s[2], rng);
    const NMor h = random_morphism(cat, s[2], s[3], rng);
    ++out.triples;
    const NMor lhs = compose_in(cat, h, compose_in(cat, g, f));
    const NMor rhs = compose_in(cat, compose_in(cat, h, g), f);
    std::string where = format_morphism(h) + " o " + format_morphism(g) + " o " + format_morphism(f);
    if (lhs != rhs) out.failure = "associativity fails on " + where;
    if (forget(lhs) != compose(forget(h), compose(forget(g), forget(f)))) out.failure = "phi fails on " + where;
    if (cat == Category::Delta &&
        lhs != lift(compose(forget(h), compose(forget(g), forget(f))), LiftMode::Delta))
      out.failure = "psi fails on " + where;
    if (!out.failure.empty()) return out;
  }
  return out;
}

CriterionResult category_laws(std::uint64_t seed) {
  CriterionResult r{2, "category laws", true, ""};
  std::mt19937_64 rng(seed);
  std::size_t exhaustive = 0, sampled = 0;
  for (Category cat : kCategories) {
    LawCount all = exhaustive_associativity(cat, 4);
    LawCount some = all.failure.empty() ? random_associativity(cat, 6, 500, rng) : LawCount{};
    exhaustive += all.triples;
    sampled += some.triples;
    for (const auto* failure : {&all.failure, &some.failure})
      if (!failure->empty()) {
        r.pass = false;
        r.detail = std::string(category_name(cat)) + ": " + *failure;
        return r;
      }
  }
  r.detail = std::to_string(exhaustive) + " triples exhaustive (sizes <= 4), " + std::to_string(sampled) +
             " seeded (sizes <= 6); identity, phi and psi laws";
  return r;
}

// ---------------------------------------------------------------------------

// Rows of each differential are drawn from the integer vectors in {-2..2}
// killing the previous differential, so d o d = 0 by construction.
CochainComplex random_complex(std::mt19937_64& rng) {
  CochainComplex c;
  const std::size_t top = uniform_below(rng, 4);
  for (std::size_t p = 0; p <= top; ++p) c.dims.push_back(uniform_below(rng, 4));
  for (std::size_t p = 0; p < top; ++p) {
    const std::size_t cols = c.dims[p];
    std::vector<std::vector<int>> allowed;
    std::vector<int> v(cols, -2);
    while (true) {
      bool ok = true;
      if (p > 0) {
        const Matrix& prev = c.differentials[p - 1];
        for (std::size_t j = 0; j < prev.cols() && ok; ++j) {
          Rational s;
          for (std::size_t i = 0; i < cols; ++i) s += Rational(v[i]) * prev(i, j);
          ok = s.is_zero();
        }
      }
      if (ok) allowed.push_back(v);
      std::size_t i = 0;
      while (i < cols && v[i] == 2) v[i++] = -2;
      if (i == cols) break;
      ++v[i];
    }
    Matrix d(c.dims[p + 1], cols);
    for (std::size_t row = 0; row < d.rows(); ++row) {
      const auto& pick = allowed[uniform_below(rng, allowed.size())];
      for (std::size_t j = 0; j < cols; ++j) d(row, j) = Rational(pick[j]);
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

CriterionResult dold_kan(std::uint64_t seed) {
  CriterionResult r{3, "Dold-Kan", true, ""};
  auto fail = [&r](std::string what) {
    r.pass = false;
    r.detail = std::move(what);
    return r;
  };
  for (std::size_t p = 0; p <= 4; ++p) {
    CatModule k = realize(shifted_unit(p), 10);
    for (std::size_t n = 1; n <= 10; ++n)
      if (k.dim(n) != pascal(n - 1, p))
        return fail("dim K(p=" + std::to_string(p) + ")[" + std::to_string(n) + "] = " + std::to_string(k.dim(n)) +
                    ", expected " + std::to_string(pascal(n - 1, p)));
  }
  std::mt19937_64 rng(seed ^ 0xd01dca11ULL);
  std::size_t nonzero = 0;
  for (std::size_t trial = 0; trial < 50; ++trial) {
    CochainComplex c = random_complex(rng);
    c.validate();
    CochainComplex back = conormalize(realize(c, c.top() + 2));
    try {
      back.validate();
    } catch (const std::exception& e) {
      return fail("complex " + std::to_string(trial) + ": " + e.what());
    }
    for (std::size_t q = 0; q < back.dims.size(); ++q) {
      const std::size_t want = q <= c.top() ? c.dims[q] : 0;
      if (back.dims[q] != want)
        return fail("complex " + std::to_string(trial) + ": dims " + join(c.dims) + " came back as " + join(back.dims));
    }
    for (std::size_t q = 0; q < back.differentials.size(); ++q) {
      const std::size_t want = q < c.differentials.size() ? rank(c.differentials[q]) : 0;
      if (rank(back.differentials[q]) != want)
        return fail("complex " + std::to_string(trial) + ": differential rank changed in degree " + std::to_string(q));
      if (want > 0) ++nonzero;
    }
  }
  r.detail = "dim K(p)[n] = C(n-1,p) for p <= 4, n <= 10; 50 seeded complexes round-trip (" +
             std::to_string(nonzero) + " nonzero differentials)";
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult dimension_polynomials() {
  CriterionResult r{4, "dimension polynomials", true, ""};
  std::ostringstream detail;
  constexpr std::size_t kSimpleMax = 8;
  for (std::size_t k = 1; k <= 3; ++k) {
    DimPolynomial poly = dim_polynomial(restrict_module(make_simple(SimpleSpec::C(k), kSimpleMax), Restriction::Psi));
    for (std::size_t n = 1; n <= kSimpleMax; ++n)
      if (poly(n) != Rational(static_cast<long>(pascal(n, k)))) {
        r.pass = false;
        r.detail = "C" + std::to_string(k) + ": P(" + std::to_string(n) + ") = " + poly(n).str();
        return r;
      }
    detail << "C" << k << ": " << poly.str() << "; ";
  }
  constexpr std::size_t kArnoldMax = 7;
  for (std::size_t i = 0; i <= 2; ++i) {
    CatModule v = restrict_module(restrict_module(arnold_module(i, kArnoldMax), Restriction::Phi), Restriction::Psi);
    DimPolynomial poly = dim_polynomial(v);
    for (std::size_t n = 1; n <= kArnoldMax; ++n)
      if (poly(n) != Rational(static_cast<long>(stirling_product_coefficient(i, n)))) {
        r.pass = false;
        r.detail = "H" + std::to_string(i) + ": P(" + std::to_string(n) + ") = " + poly(n).str();
        return r;
      }
    detail << "H" << i << ": " << poly.str() << (i < 2 ? "; " : "");
  }
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult descent() {
  CriterionResult r{5, "descent through phi", true, ""};
  constexpr std::size_t kUpTo = 5;
  std::vector<std::pair<std::string, CatModule>> modules;
  for (std::size_t k = 1; k <= 3; ++k)
    modules.emplace_back("C" + std::to_string(k), make_simple(SimpleSpec::C(k), kUpTo));
  modules.emplace_back("D1", make_simple(SimpleSpec::D1(), kUpTo));
  for (std::size_t i = 0; i <= 2; ++i)
    modules.emplace_back("H" + std::to_string(i), restrict_module(arnold_module(i, kUpTo), Restriction::Phi));
  std::size_t pairs = 0;
  for (const auto& [name, v] : modules) {
    DescentReport rep = descends_through_phi(v, kUpTo);
    pairs += rep.pairs_checked;
    if (!rep.pass) {
      r.pass = false;
      r.detail = name + " does not descend: " + rep.witness;
      return r;
    }
  }
  DescentReport control = descends_through_phi(fiber_sign_module(kUpTo), kUpTo);
  if (control.pass || control.witness.empty()) {
    r.pass = false;
    r.detail = "fiber-sign control module was not rejected";
    return r;
  }
  r.detail = "C1 C2 C3 D1 H0 H1 H2 descend (" + std::to_string(pairs) +
             " pairs, sizes <= 5); fiber-sign control rejected";
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult character_polynomials() {
  CriterionResult r{6, "character polynomials", true, ""};
  const std::vector<std::size_t> fit{1, 2, 3, 4, 5, 6};
  const std::vector<std::size_t> test{7, 8};
  struct Case {
    std::string name;
    CatModule module;
    std::string expected;
  };
  std::vector<Case> cases;
  cases.push_back({"C1", make_simple(SimpleSpec::C(1), 8), "X1"});
  cases.push_back({"C2", make_simple(SimpleSpec::C(2), 8), "C(X1,2) + X2"});
  cases.push_back({"D1", make_simple(SimpleSpec::D1(), 8), "1"});
  cases.push_back({"H1", arnold_module(1, 8), "C(X1,2) + X2"});
  std::string detail;
  for (const auto& c : cases) {
    CharacterFit result = fit_character_polynomial(c.module, 2, fit, test);
    if (!result.ok()) {
      r.pass = false;
      r.detail = c.name + ": " + (result.witness ? result.witness->str() : std::string("no fit"));
      return r;
    }
    const std::string got = result.polynomial->str();
    if (got != c.expected || !result.unique) {
      r.pass = false;
      r.detail = c.name + ": fitted " + got + (result.unique ? "" : " (not unique)") + ", expected " + c.expected;
      return r;
    }
    if (c.name == "H1" && result.polynomial->degree() != 2) {
      r.pass = false;
      r.detail = "H1 polynomial has degree " + std::to_string(result.polynomial->degree());
      return r;
    }
    detail += c.name + " = " + got + "; ";
  }
  r.detail = detail + "fit on 1..6, exact on 7..8, deg H1 = 2";
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult invariant_dimensions() {
  CriterionResult r{7, "invariant dimensions", true, ""};
  constexpr std::size_t kMax = 7;
  std::string detail;
  auto check = [&](const std::string& name, const CatModule& v, const std::function<std::size_t(std::size_t)>& want) {
    MonotonicityReport rep = monotonicity_check(v, 1, kMax);
    std::vector<std::size_t> dims;
    for (const auto& [n, d] : rep.dims) dims.push_back(d);
    bool match = rep.pass;
    for (const auto& [n, d] : rep.dims) match = match && d == want(n);
    detail += name + ": " + join(dims) + "; ";
    if (!match && r.pass) {
      r.pass = false;
      r.detail = name + ": invariant dims " + join(dims);
    }
  };
  for (std::size_t k = 1; k <= 3; ++k)
    check("C" + std::to_string(k), make_simple(SimpleSpec::C(k), kMax), [k](std::size_t n) { return n >= k ? 1 : 0; });
  check("H0", arnold_module(0, kMax), [](std::size_t) { return std::size_t{1}; });
  check("H1", arnold_module(1, kMax), [](std::size_t n) { return n >= 2 ? 1 : 0; });
  check("H2", arnold_module(2, kMax), [](std::size_t) { return std::size_t{0}; });
  if (r.pass) r.detail = detail.substr(0, detail.size() - 2);
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult replication() {
  CriterionResult r{8, "replication", true, ""};
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 2}};
  const CatModule c2 = make_simple(SimpleSpec::C(2), 6);
  const CatModule h1 = arnold_module(1, 6);
  for (const auto& [name, v] : {std::pair{"C2", &c2}, std::pair{"H1", &h1}})
    for (auto [n, m] : shapes) {
      ReplicationReport rep = replication_iso_check(*v, n, m);
      if (!rep.pass) {
        r.pass = false;
        r.detail = std::string(name) + ": " + rep.str();
        return r;
      }
    }
  ReplicationReport control = replication_iso_check(make_simple(SimpleSpec::C(3), 4), 2, 2);
  if (control.pass) {
    r.pass = false;
    r.detail = "C3 at n=2, m=2 reported invertible: " + control.str();
    return r;
  }
  r.detail = "C2 and H1 invertible at (2,2) (2,3) (3,2); C3 at (2,2) correctly not invertible (" +
             std::to_string(control.barred.rows()) + "x" + std::to_string(control.barred.cols()) + ")";
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult arnold_oracle() {
  CriterionResult r{9, "Arnold dimensions", true, ""};
  for (std::size_t i = 0; i <= 7; ++i)
    for (std::size_t n = 1; n <= 7; ++n) {
      const std::size_t got = arnold_dim(i, n);
      const std::uint64_t want = stirling_product_coefficient(i, n);
      if (got != want) {
        r.pass = false;
        r.detail = "arnold_dim(" + std::to_string(i) + "," + std::to_string(n) + ") = " + std::to_string(got) +
                   ", product gives " + std::to_string(want);
        return r;
      }
    }
  std::vector<std::size_t> row;
  for (std::size_t n = 1; n <= 7; ++n) row.push_back(arnold_dim(2, n));
  r.detail = "i, n <= 7 agree with prod (1+kt); degree 2: " + join(row);
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult round_trips(std::uint64_t seed) {
  CriterionResult r{10, "round trips", true, ""};
  std::vector<std::pair<std::string, CatModule>> fixtures;
  for (std::size_t k = 1; k <= 3; ++k)
    fixtures.emplace_back("C" + std::to_string(k), make_simple(SimpleSpec::C(k), 5));
  fixtures.emplace_back("D0", make_simple(SimpleSpec::D0(), 5));
  fixtures.emplace_back("D1", make_simple(SimpleSpec::D1(), 5));
  for (std::size_t i = 0; i <= 2; ++i) fixtures.emplace_back("H" + std::to_string(i), arnold_module(i, 5));
  fixtures.emplace_back("K(2)", realize(shifted_unit(2), 5));
  fixtures.emplace_back("FI rep", representable(Category::FI, 2, 4));
  std::mt19937_64 rng(seed ^ 0x0707ULL);
  std::vector<CochainComplex> complexes;
  for (std::size_t t = 0; t < 10; ++t) complexes.push_back(random_complex(rng));
  for (const auto& [name, v] : fixtures) {
    const std::string text = write_catmod(v);
    if (write_catmod(read_catmod(text)) != text) {
      r.pass = false;
      r.detail = name + ": catmod/1 text changed after a round trip";
      return r;
    }
  }
  for (std::size_t t = 0; t < complexes.size(); ++t) {
    const std::string text = write_cochain(complexes[t]);
    if (write_cochain(read_cochain(text)) != text) {
      r.pass = false;
      r.detail = "complex " + std::to_string(t) + ": cochain/1 text changed after a round trip";
      return r;
    }
  }
  r.detail = std::to_string(fixtures.size()) + " catmod/1 fixtures and " + std::to_string(complexes.size()) +
             " cochain/1 complexes round-trip byte-exactly";
  return r;
}

const char* const kTitles[] = {"hom counts",       "category laws",        "Dold-Kan",
                               "dimension polynomials", "descent through phi", "character polynomials",
                               "invariant dimensions",  "replication",         "Arnold dimensions",
                               "round trips"};

}  // namespace

std::uint64_t stirling_product_coefficient(std::size_t i, std::size_t n) {
  std::vector<std::uint64_t> poly{1};
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    std::vector<std::uint64_t> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j] * k;
    }
    poly = std::move(next);
  }
  return i < poly.size() ? poly[i] : 0;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  try {
    switch (id) {
      case 1: return hom_counts();
      case 2: return category_laws(seed);
      case 3: return dold_kan(seed);
      case 4: return dimension_polynomials();
      case 5: return descent();
      case 6: return character_polynomials();
      case 7: return invariant_dimensions();
      case 8: return replication();
      case 9: return arnold_oracle();
      default: return round_trips(seed);
    }
  } catch (const std::exception& e) {
    return CriterionResult{id, kTitles[id - 1], false, std::string("error: ") + e.what()};
  }
}

bool AcceptanceReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

std::string AcceptanceReport::str() const {
  std::string out = "acceptance seed=" + std::to_string(seed) + "\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    char head[64];
    std::snprintf(head, sizeof head, "%2d %s  %-22s ", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str());
    out += head + r.detail + "\n";
    passed += r.pass ? 1 : 0;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria pass\n";
  return out;
}

AcceptanceReport run_acceptance(std::uint64_t seed) {
  AcceptanceReport report;
  report.seed = seed;
  for (int id = 1; id <= kCriterionCount; ++id) report.results.push_back(run_criterion(id, seed));
  return report;
}

}  // namespace ncfin
