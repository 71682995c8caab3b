#include "ncfin/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "text_io.hpp"

namespace ncfin {

// ---------------------------------------------------------------------------
// Elementary generators

namespace {

bool has_transpositions(Category cat) { return cat != Category::Delta; }
bool has_codegeneracies(Category cat) { return cat != Category::FI; }

std::string_view kind_name(ElementaryKind kind) {
  switch (kind) {
    case ElementaryKind::Coface: return "coface";
    case ElementaryKind::Codegeneracy: return "codegeneracy";
    case ElementaryKind::Transposition: return "transposition";
  }
  return "?";
}

}  // namespace

std::vector<ElementaryGenerator> elementary_generators(Category cat, std::size_t max_level) {
  std::vector<ElementaryGenerator> out;
  const std::size_t lo = cat == Category::Delta ? 1 : 0;
  for (std::size_t n = lo; n <= max_level; ++n) {
    if (has_transpositions(cat))
      for (std::size_t i = 1; i + 1 <= n; ++i)
        out.push_back({ElementaryKind::Transposition, n, i, transposition(n, i)});
    if (n == max_level) break;
    for (std::size_t i = 1; i <= n + 1; ++i) out.push_back({ElementaryKind::Coface, n, i, coface(n, i)});
    if (has_codegeneracies(cat))
      for (std::size_t i = 1; i <= n; ++i)
        out.push_back({ElementaryKind::Codegeneracy, n, i, codegeneracy(n, i)});
  }
  return out;
}

NMor compose_in(Category cat, const NMor& g, const NMor& f) {
  return normalize_morphism(cat, compose(g, f));
}

// ---------------------------------------------------------------------------
// Backends

class CatModule::Backend {
 public:
  virtual ~Backend() = default;
  virtual Matrix act(const CatModule& self, const NMor& f) const = 0;
  virtual const std::vector<Matrix>* blocks() const { return nullptr; }
};

class CatModule::RuleBackend final : public CatModule::Backend {
 public:
  explicit RuleBackend(Rule rule) : rule_(std::move(rule)) {}
  Matrix act(const CatModule&, const NMor& f) const override { return rule_(f); }

 private:
  Rule rule_;
};

class CatModule::ElementaryBackend final : public CatModule::Backend {
 public:
  ElementaryBackend(Category cat, std::size_t max_level, std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
    auto gens = elementary_generators(cat, max_level);
    for (std::size_t k = 0; k < gens.size(); ++k) index_[{gens[k].kind, gens[k].level, gens[k].index}] = k;
  }

  const std::vector<Matrix>* blocks() const override { return &blocks_; }

  Matrix act(const CatModule& self, const NMor& f) const override {
    Factorization fac = factorize(f);
    return act_injection(self, fac.iota) * (act_surjection(self, fac.pi) * act_bijection(self, fac.sigma));
  }

 private:
  const Matrix& block(ElementaryKind kind, std::size_t level, std::size_t i) const {
    return blocks_.at(index_.at({kind, level, i}));
  }

  // sigma = sigma' o t_i whenever sigma(i) > sigma(i+1); bubble down to the identity.
  Matrix act_bijection(const CatModule& self, const NMor& sigma) const {
    const std::size_t m = sigma.dom();
    std::vector<std::size_t> v = sigma.map().values();
    Matrix acc = Matrix::identity(self.dim(m));
    while (true) {
      std::size_t i = 1;
      while (i < m && v[i - 1] < v[i]) ++i;
      if (i >= m) break;
      acc = block(ElementaryKind::Transposition, m, i) * acc;
      std::swap(v[i - 1], v[i]);
    }
    return acc;
  }

  // p = p' o s^x at the first collision x, p(x) = p(x+1).
  Matrix act_surjection(const CatModule& self, const NMor& pi) const {
    std::vector<std::size_t> v = pi.map().values();
    Matrix acc = Matrix::identity(self.dim(v.size()));
    while (v.size() > pi.cod()) {
      std::size_t x = 1;
      while (v[x - 1] != v[x]) ++x;
      acc = block(ElementaryKind::Codegeneracy, v.size() - 1, x) * acc;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(x));
    }
    return acc;
  }

  // iota = d^y o iota' where y is the smallest value missed.
  Matrix act_injection(const CatModule& self, const NMor& iota) const {
    std::vector<std::size_t> v = iota.map().values();
    std::size_t n = iota.cod();
    Matrix acc = Matrix::identity(self.dim(n));
    while (n > v.size()) {
      std::size_t y = 1;
      while (y <= v.size() && v[y - 1] == y) ++y;
      acc = acc * block(ElementaryKind::Coface, n - 1, y);
      for (auto& x : v)
        if (x > y) --x;
      --n;
    }
    return acc;
  }

  std::vector<Matrix> blocks_;
  std::map<std::tuple<ElementaryKind, std::size_t, std::size_t>, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// CatModule

CatModule::CatModule(Category cat, std::size_t max_level, std::vector<std::size_t> dims,
                     std::shared_ptr<const Backend> backend)
    : category_(cat), max_level_(max_level), dims_(std::move(dims)), backend_(std::move(backend)) {
  if (dims_.size() != max_level_ + 1)
    throw std::invalid_argument("module needs " + std::to_string(max_level_ + 1) + " dimensions, got " +
                                std::to_string(dims_.size()));
  if (cat == Category::Delta && dims_[0] != 0)
    throw std::invalid_argument("Delta modules have no level 0; its dimension must be 0");
}

CatModule CatModule::from_rule(Category cat, std::size_t max_level, std::vector<std::size_t> dims, Rule rule) {
  return CatModule(cat, max_level, std::move(dims), std::make_shared<RuleBackend>(std::move(rule)));
}

CatModule CatModule::from_elementary(Category cat, std::size_t max_level, std::vector<std::size_t> dims,
                                     std::vector<Matrix> blocks) {
  auto gens = elementary_generators(cat, max_level);
  if (blocks.size() != gens.size())
    throw std::invalid_argument("expected " + std::to_string(gens.size()) + " elementary blocks, got " +
                                std::to_string(blocks.size()));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const NMor& f = gens[k].morphism;
    const std::size_t r = f.cod() < dims.size() ? dims[f.cod()] : 0;
    const std::size_t c = f.dom() < dims.size() ? dims[f.dom()] : 0;
    if (blocks[k].rows() != r || blocks[k].cols() != c)
      throw std::invalid_argument("elementary block " + std::string(kind_name(gens[k].kind)) + " " +
                                  std::to_string(gens[k].level) + " " + std::to_string(gens[k].index) +
                                  " has shape " + std::to_string(blocks[k].rows()) + "x" +
                                  std::to_string(blocks[k].cols()) + ", expected " + std::to_string(r) + "x" +
                                  std::to_string(c));
  }
  return CatModule(cat, max_level, std::move(dims),
                   std::make_shared<ElementaryBackend>(cat, max_level, std::move(blocks)));
}

std::size_t CatModule::dim(std::size_t n) const {
  if (n > max_level_) throw std::out_of_range("level " + std::to_string(n) + " exceeds truncation");
  return dims_[n];
}

Matrix CatModule::act(const NMor& f) const {
  if (f.dom() > max_level_ || f.cod() > max_level_)
    throw std::out_of_range("morphism " + format_morphism(f) + " exceeds truncation level " +
                            std::to_string(max_level_));
  if (!in_category(category_, f))
    throw std::invalid_argument("morphism " + format_morphism(f) + " is not in category " +
                                std::string(category_name(category_)));
  Matrix out = backend_->act(*this, f);
  if (out.rows() != dims_[f.cod()] || out.cols() != dims_[f.dom()])
    throw std::logic_error("module backend returned a " + std::to_string(out.rows()) + "x" +
                           std::to_string(out.cols()) + " matrix for " + format_morphism(f));
  return out;
}

bool CatModule::has_elementary_backend() const { return backend_->blocks() != nullptr; }

const std::vector<Matrix>& CatModule::elementary_blocks() const {
  static const std::vector<Matrix> kEmpty;
  const auto* b = backend_->blocks();
  return b ? *b : kEmpty;
}

CatModule tabulate(const CatModule& v) {
  std::vector<Matrix> blocks;
  for (const auto& gen : elementary_generators(v.category(), v.max_level())) blocks.push_back(v.act(gen.morphism));
  return CatModule::from_elementary(v.category(), v.max_level(), v.dims(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Functoriality

namespace {

bool check_identities(const CatModule& v, std::size_t up_to, FunctorialityReport& report) {
  for (std::size_t n = v.min_level(); n <= up_to; ++n) {
    if (!v.act(NMor::identity(n)).is_identity()) {
      report.pass = false;
      report.counterexample = "act(id[" + std::to_string(n) + "]) is not the identity";
      return false;
    }
  }
  return true;
}

bool check_pair(const CatModule& v, const NMor& g, const NMor& f, const Matrix& ag, const Matrix& af,
                const Matrix& agf, FunctorialityReport& report) {
  ++report.pairs_checked;
  if (agf == ag * af) return true;
  report.pass = false;
  report.counterexample = "g = " + format_morphism(g) + ", f = " + format_morphism(f) +
                          ": act(g o f) != act(g) act(f) in " + std::string(category_name(v.category()));
  return false;
}

bool hom_nonempty(Category cat, std::size_t m, std::size_t n) { return hom_count(cat, m, n) > 0; }

}  // namespace

FunctorialityReport check_functoriality_exhaustive(const CatModule& v, std::size_t up_to) {
  FunctorialityReport report;
  report.exhaustive = true;
  up_to = std::min(up_to, v.max_level());
  if (!check_identities(v, up_to, report)) return report;
  const Category cat = v.category();
  const std::size_t lo = v.min_level();

  std::unordered_map<NMor, Matrix, NMorHash> cache;
  auto cached = [&](const NMor& f) -> const Matrix& {
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, v.act(f)).first;
    return it->second;
  };

  for (std::size_t b = lo; b <= up_to; ++b) {
    std::vector<NMor> into, out_of;
    for (std::size_t a = lo; a <= up_to; ++a)
      for (auto& f : enumerate_hom(cat, a, b)) into.push_back(std::move(f));
    for (std::size_t c = lo; c <= up_to; ++c)
      for (auto& g : enumerate_hom(cat, b, c)) out_of.push_back(std::move(g));
    for (const auto& g : out_of)
      for (const auto& f : into) {
        NMor gf = compose_in(cat, g, f);
        if (!check_pair(v, g, f, cached(g), cached(f), cached(gf), report)) return report;
      }
  }
  return report;
}

FunctorialityReport check_functoriality(const CatModule& v, std::size_t trials, std::uint64_t seed) {
  const Category cat = v.category();
  const std::size_t lo = v.min_level();
  const std::size_t hi = v.max_level();
  mpz_class total = 0;
  for (std::size_t b = lo; b <= hi; ++b) {
    mpz_class into = 0, out_of = 0;
    for (std::size_t a = lo; a <= hi; ++a) into += hom_count(cat, a, b);
    for (std::size_t c = lo; c <= hi; ++c) out_of += hom_count(cat, b, c);
    total += into * out_of;
  }
  if (total <= trials) return check_functoriality_exhaustive(v, hi);

  FunctorialityReport report;
  if (!check_identities(v, hi, report)) return report;
  std::mt19937_64 rng(seed);
  const std::size_t span = hi - lo + 1;
  while (report.pairs_checked < trials) {
    std::size_t a = lo + uniform_below(rng, span);
    std::size_t b = lo + uniform_below(rng, span);
    std::size_t c = lo + uniform_below(rng, span);
    if (!hom_nonempty(cat, a, b) || !hom_nonempty(cat, b, c)) continue;
    NMor f = random_morphism(cat, a, b, rng);
    NMor g = random_morphism(cat, b, c, rng);
    NMor gf = compose_in(cat, g, f);
    if (!check_pair(v, g, f, v.act(g), v.act(f), v.act(gf), report)) return report;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Restriction, sums, fixtures

CatModule restrict_module(const CatModule& v, Restriction along) {
  switch (along) {
    case Restriction::Psi: {
      if (v.category() != Category::N)
        throw std::invalid_argument("restriction along psi needs an N-module");
      std::vector<std::size_t> dims = v.dims();
      dims[0] = 0;
      // Delta morphisms are already represented by their psi-lifts.
      return CatModule::from_rule(Category::Delta, v.max_level(), std::move(dims),
                                  [v](const NMor& f) { return v.act(f); });
    }
    case Restriction::Phi: {
      if (v.category() != Category::F)
        throw std::invalid_argument("restriction along phi needs an F-module");
      return CatModule::from_rule(Category::N, v.max_level(), v.dims(), [v](const NMor& f) {
        return v.act(lift(forget(f), LiftMode::Canonical));
      });
    }
  }
  throw std::logic_error("unreachable");
}

GenerationCertificate generation_degree(const CatModule& v) {
  const Category cat = v.category();
  const std::size_t lo = v.min_level();
  const std::size_t hi = v.max_level();
  for (std::size_t g = lo; g <= hi; ++g) {
    GenerationCertificate cert;
    cert.degree = g;
    cert.witnesses.resize(hi + 1);
    bool spans = true;
    for (std::size_t n = lo; n <= hi && spans; ++n) {
      auto& wit = cert.witnesses[n];
      if (n <= g) {
        for (std::size_t j = 0; j < v.dim(n); ++j) wit.push_back({NMor::identity(n), j});
        continue;
      }
      // Every morphism into [n] from a smaller level factors through a coface,
      // so V[n] is generated from below iff the coface images span it.
      Matrix prev(v.dim(n - 1), 0);
      for (const auto& w : cert.witnesses[n - 1]) prev = hstack(prev, v.act(w.morphism).column(w.source_index));
      std::vector<GenerationWitness> candidates;
      Matrix witnessed(v.dim(n), 0);
      for (std::size_t i = 1; i <= n; ++i) {
        NMor d = coface(n - 1, i);
        witnessed = hstack(witnessed, v.act(d) * prev);
        for (const auto& w : cert.witnesses[n - 1])
          candidates.push_back({compose_in(cat, d, w.morphism), w.source_index});
      }
      RowReduction red = reduce(witnessed);
      if (red.rank < v.dim(n)) {
        spans = false;
        break;
      }
      for (auto c : red.pivot_cols) wit.push_back(candidates[c]);
    }
    if (spans) {
      cert.certified = g < hi;
      return cert;
    }
  }
  throw std::logic_error("generation_degree: top level failed to span itself");
}

bool verify_generation(const CatModule& v, const GenerationCertificate& cert) {
  if (cert.witnesses.size() != v.max_level() + 1) return false;
  for (std::size_t n = v.min_level(); n <= v.max_level(); ++n) {
    Matrix span(v.dim(n), 0);
    for (const auto& w : cert.witnesses[n]) {
      if (w.morphism.cod() != n || w.morphism.dom() > cert.degree) return false;
      span = hstack(span, v.act(w.morphism).column(w.source_index));
    }
    if (rank(span) != v.dim(n)) return false;
  }
  return true;
}

CatModule direct_sum(const CatModule& v, const CatModule& w) {
  if (v.category() != w.category() || v.max_level() != w.max_level())
    throw std::invalid_argument("direct sum needs equal categories and truncations");
  std::vector<std::size_t> dims(v.max_level() + 1);
  for (std::size_t n = 0; n <= v.max_level(); ++n) dims[n] = v.dims()[n] + w.dims()[n];
  return CatModule::from_rule(v.category(), v.max_level(), std::move(dims),
                              [v, w](const NMor& f) { return block_diagonal(v.act(f), w.act(f)); });
}

CatModule representable(Category cat, std::size_t q, std::size_t max_level) {
  struct Basis {
    std::vector<std::vector<NMor>> homs;
    std::vector<std::unordered_map<NMor, std::size_t, NMorHash>> index;
  };
  auto basis = std::make_shared<Basis>();
  const std::size_t lo = cat == Category::Delta ? 1 : 0;
  std::vector<std::size_t> dims(max_level + 1, 0);
  basis->homs.resize(max_level + 1);
  basis->index.resize(max_level + 1);
  for (std::size_t n = lo; n <= max_level; ++n) {
    basis->homs[n] = enumerate_hom(cat, q, n);
    dims[n] = basis->homs[n].size();
    for (std::size_t k = 0; k < dims[n]; ++k) basis->index[n].emplace(basis->homs[n][k], k);
  }
  return CatModule::from_rule(cat, max_level, std::move(dims), [cat, basis](const NMor& f) {
    const auto& src = basis->homs[f.dom()];
    Matrix out(basis->homs[f.cod()].size(), src.size());
    for (std::size_t k = 0; k < src.size(); ++k) out(basis->index[f.cod()].at(compose_in(cat, f, src[k])), k) = 1;
    return out;
  });
}

CatModule constant_module(Category cat, std::size_t max_level) {
  std::vector<std::size_t> dims(max_level + 1, 1);
  if (cat == Category::Delta) dims[0] = 0;
  return CatModule::from_rule(cat, max_level, std::move(dims), [](const NMor&) { return Matrix::identity(1); });
}

// ---------------------------------------------------------------------------
// catmod/1

std::string write_catmod(const CatModule& v) {
  const CatModule explicit_v = v.has_elementary_backend() ? v : tabulate(v);
  std::ostringstream os;
  os << "catmod/1\n";
  os << "category " << category_name(v.category()) << "\n";
  os << "max " << v.max_level() << "\n";
  os << "dims";
  for (std::size_t n = v.min_level(); n <= v.max_level(); ++n) os << ' ' << v.dims()[n];
  os << "\n";
  auto gens = elementary_generators(v.category(), v.max_level());
  const auto& blocks = explicit_v.elementary_blocks();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& m = blocks[k];
    os << kind_name(gens[k].kind) << ' ' << gens[k].level << ' ' << gens[k].index << ' ' << m.rows() << 'x'
       << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) os << ' ';
        os << m(r, c).str();
      }
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

CatModule read_catmod(std::string_view text) {
  using detail::LineReader;
  using detail::parse_size;
  using detail::split_ws;
  LineReader in(text, "catmod");
  if (in.next() != "catmod/1") in.fail("expected header 'catmod/1'");
  auto toks = split_ws(in.next());
  if (toks.size() != 2 || toks[0] != "category") in.fail("expected 'category <tag>'");
  Category cat;
  try {
    cat = parse_category(toks[1]);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  toks = split_ws(in.next());
  if (toks.size() != 2 || toks[0] != "max") in.fail("expected 'max <N>'");
  const std::size_t max_level = parse_size(in, toks[1]);
  toks = split_ws(in.next());
  const std::size_t lo = cat == Category::Delta ? 1 : 0;
  if (toks.empty() || toks[0] != "dims" || toks.size() != max_level - lo + 2)
    in.fail("expected 'dims' followed by " + std::to_string(max_level - lo + 1) + " values");
  std::vector<std::size_t> dims(max_level + 1, 0);
  for (std::size_t n = lo; n <= max_level; ++n) dims[n] = parse_size(in, toks[n - lo + 1]);

  auto gens = elementary_generators(cat, max_level);
  std::vector<Matrix> blocks;
  for (const auto& gen : gens) {
    toks = split_ws(in.next());
    if (toks.size() != 4 || toks[0] != kind_name(gen.kind) || toks[1] != std::to_string(gen.level) ||
        toks[2] != std::to_string(gen.index))
      in.fail("expected block '" + std::string(kind_name(gen.kind)) + " " + std::to_string(gen.level) + " " +
              std::to_string(gen.index) + " RxC'");
    const auto [r, c] = detail::parse_shape(in, toks[3]);
    if (r != dims[gen.morphism.cod()] || c != dims[gen.morphism.dom()]) in.fail("block shape disagrees with dims");
    std::string body = in.block(r);
    try {
      blocks.push_back(parse_matrix(body, r, c));
    } catch (const std::invalid_argument& e) {
      in.fail(e.what());
    }
  }
  if (in.next() != "end") in.fail("expected 'end'");
  while (!in.at_end())
    if (!split_ws(in.next()).empty()) in.fail("trailing content after 'end'");
  return CatModule::from_elementary(cat, max_level, std::move(dims), std::move(blocks));
}

}  // namespace ncfin
