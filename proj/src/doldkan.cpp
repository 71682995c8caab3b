#include "ncfin/doldkan.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "text_io.hpp"

namespace ncfin {

void CochainComplex::validate() const {
  if (dims.empty()) throw std::invalid_argument("cochain complex needs at least one degree");
  if (differentials.size() != dims.size() - 1)
    throw std::invalid_argument("cochain complex: expected " + std::to_string(dims.size() - 1) + " differentials");
  for (std::size_t p = 0; p < differentials.size(); ++p) {
    const Matrix& d = differentials[p];
    if (d.rows() != dims[p + 1] || d.cols() != dims[p])
      throw std::invalid_argument("differential " + std::to_string(p) + " has the wrong shape");
  }
  for (std::size_t p = 0; p + 1 < differentials.size(); ++p)
    if (!(differentials[p + 1] * differentials[p]).is_zero())
      throw std::invalid_argument("d o d != 0 in degree " + std::to_string(p));
}

CochainComplex shifted_unit(std::size_t p) {
  CochainComplex c;
  c.dims.assign(p + 1, 0);
  c.dims[p] = 1;
  for (std::size_t q = 0; q < p; ++q) c.differentials.emplace_back(c.dims[q + 1], c.dims[q]);
  return c;
}

CochainComplex conormalize(const CatModule& v) {
  if (v.category() != Category::Delta) throw std::invalid_argument("conormalize needs a Delta-module");
  const std::size_t top = v.max_level() - 1;
  std::vector<Matrix> bases(top + 1);  // bases[p]: columns span N^p inside V[p+1]
  for (std::size_t p = 0; p <= top; ++p) {
    if (p == 0) {
      bases[p] = Matrix::identity(v.dim(1));
      continue;
    }
    Matrix stacked(0, v.dim(p + 1));
    for (std::size_t i = 1; i <= p; ++i) stacked = vstack(stacked, v.act(codegeneracy(p, i)));
    bases[p] = kernel(stacked);
  }
  CochainComplex out;
  for (const auto& b : bases) out.dims.push_back(b.cols());
  for (std::size_t p = 0; p < top; ++p) {
    Matrix image(v.dim(p + 2), bases[p].cols());
    for (std::size_t i = 1; i <= p + 2; ++i) {
      Matrix term = v.act(coface(p + 1, i)) * bases[p];
      if (i % 2 == 1) {
        image += term;
      } else {
        image -= term;
      }
    }
    auto coords = solve(bases[p + 1], image);
    if (!coords)
      throw std::runtime_error("conormalize: alternating coface sum leaves the normalized subspace in degree " +
                               std::to_string(p) + "; the module is not a functor");
    out.differentials.push_back(std::move(*coords));
  }
  for (std::size_t p = 0; p + 1 < out.differentials.size(); ++p)
    if (!(out.differentials[p + 1] * out.differentials[p]).is_zero())
      throw std::runtime_error("conormalize: d o d != 0 in degree " + std::to_string(p));
  return out;
}

namespace {

// Monotone surjections [n] -> [q] for q = 1..min(n, top+1), grouped by q.
struct RealizedLevel {
  struct Summand {
    std::vector<std::size_t> values;
    std::size_t degree;  // q - 1
    std::size_t offset;
  };
  std::vector<Summand> summands;
  std::size_t dim = 0;
};

void monotone_surjections(std::size_t n, std::size_t q, std::vector<std::size_t>& cur,
                          std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    if (cur.back() == q) out.push_back(cur);
    return;
  }
  std::size_t last = cur.back();
  // Remaining positions must still be able to reach q.
  if (q - last > n - cur.size()) return;
  cur.push_back(last);
  monotone_surjections(n, q, cur, out);
  cur.back() = last + 1;
  if (last + 1 <= q) monotone_surjections(n, q, cur, out);
  cur.pop_back();
}

RealizedLevel realized_level(const CochainComplex& c, std::size_t n) {
  RealizedLevel level;
  for (std::size_t q = 1; q <= n && q <= c.dims.size(); ++q) {
    std::vector<std::vector<std::size_t>> surj;
    std::vector<std::size_t> cur{1};
    monotone_surjections(n, q, cur, surj);
    for (auto& s : surj) {
      level.summands.push_back({std::move(s), q - 1, level.dim});
      level.dim += c.dims[q - 1];
    }
  }
  return level;
}

}  // namespace

CatModule realize(const CochainComplex& c, std::size_t max_level) {
  c.validate();
  auto complex = std::make_shared<const CochainComplex>(c);
  auto levels = std::make_shared<std::vector<RealizedLevel>>(max_level + 1);
  std::vector<std::size_t> dims(max_level + 1, 0);
  for (std::size_t n = 1; n <= max_level; ++n) {
    (*levels)[n] = realized_level(c, n);
    dims[n] = (*levels)[n].dim;
  }
  // Transpose of the simplicial Dold-Kan construction on the dual complex:
  // for theta: [a] -> [b] and a summand sigma of [b], factor sigma o theta as
  // delta o tau. delta = id contributes the identity, delta missing 1
  // contributes the differential, anything else contributes zero.
  return CatModule::from_rule(Category::Delta, max_level, std::move(dims), [complex, levels](const NMor& theta) {
    const RealizedLevel& src = (*levels)[theta.dom()];
    const RealizedLevel& dst = (*levels)[theta.cod()];
    Matrix out(dst.dim, src.dim);
    auto find_summand = [&src](const std::vector<std::size_t>& values) -> const RealizedLevel::Summand& {
      for (const auto& s : src.summands)
        if (s.values == values) return s;
      throw std::logic_error("realize: missing summand");
    };
    for (const auto& sigma : dst.summands) {
      const std::size_t q = sigma.degree + 1;
      std::vector<std::size_t> composite(theta.dom());
      for (std::size_t x = 1; x <= theta.dom(); ++x) composite[x - 1] = sigma.values[theta.map()(x) - 1];
      std::vector<bool> hit(q + 1, false);
      for (std::size_t y : composite) hit[y] = true;
      std::vector<std::size_t> rank_of(q + 1, 0);
      std::size_t image = 0;
      for (std::size_t y = 1; y <= q; ++y)
        if (hit[y]) rank_of[y] = ++image;
      std::vector<std::size_t> tau(composite.size());
      for (std::size_t x = 0; x < composite.size(); ++x) tau[x] = rank_of[composite[x]];
      const Matrix* block = nullptr;
      Matrix unit;
      if (image == q) {
        unit = Matrix::identity(complex->dims[q - 1]);
        block = &unit;
      } else if (image + 1 == q && !hit[1]) {
        block = &complex->differentials[q - 2];
      } else {
        continue;
      }
      const auto& target = find_summand(tau);
      for (std::size_t r = 0; r < block->rows(); ++r)
        for (std::size_t k = 0; k < block->cols(); ++k) out(sigma.offset + r, target.offset + k) += (*block)(r, k);
    }
    return out;
  });
}

Rational DimPolynomial::operator()(std::size_t n) const {
  Rational total;
  for (std::size_t p = 0; p < multiplicities.size(); ++p)
    total += Rational(static_cast<long>(multiplicities[p])) * binomial(static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(p));
  return total;
}

Polynomial DimPolynomial::expand() const {
  Polynomial out;
  for (std::size_t p = 0; p < multiplicities.size(); ++p) {
    Polynomial term = Polynomial::binomial_basis(p, 1);
    term *= Rational(static_cast<long>(multiplicities[p]));
    out += term;
  }
  return out;
}

std::string DimPolynomial::str() const {
  std::string out;
  for (std::size_t p = 0; p < multiplicities.size(); ++p) {
    if (multiplicities[p] == 0) continue;
    if (!out.empty()) out += " + ";
    if (multiplicities[p] != 1) out += std::to_string(multiplicities[p]) + "*";
    out += "C(n-1," + std::to_string(p) + ")";
  }
  return out.empty() ? "0" : out;
}

DimPolynomial dim_polynomial(const CatModule& v) {
  CochainComplex c = conormalize(v);
  DimPolynomial poly{c.dims};
  for (std::size_t n = 1; n <= v.max_level(); ++n)
    if (poly(n) != Rational(static_cast<long>(v.dim(n))))
      throw std::runtime_error("dim_polynomial: " + poly.str() + " gives " + poly(n).str() + " at n = " +
                               std::to_string(n) + " but dim V[n] = " + std::to_string(v.dim(n)));
  return poly;
}

std::string write_cochain(const CochainComplex& c) {
  std::ostringstream os;
  os << "cochain/1\n";
  os << "top " << c.top() << "\n";
  os << "dims";
  for (auto d : c.dims) os << ' ' << d;
  os << "\n";
  for (std::size_t p = 0; p < c.differentials.size(); ++p) {
    const Matrix& d = c.differentials[p];
    os << "differential " << p << ' ' << d.rows() << 'x' << d.cols() << "\n";
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t k = 0; k < d.cols(); ++k) {
        if (k > 0) os << ' ';
        os << d(r, k).str();
      }
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

CochainComplex read_cochain(std::string_view text) {
  using detail::parse_size;
  using detail::split_ws;
  detail::LineReader in(text, "cochain");
  if (in.next() != "cochain/1") in.fail("expected header 'cochain/1'");
  auto toks = split_ws(in.next());
  if (toks.size() != 2 || toks[0] != "top") in.fail("expected 'top <P>'");
  const std::size_t top = parse_size(in, toks[1]);
  toks = split_ws(in.next());
  if (toks.size() != top + 2 || toks[0] != "dims") in.fail("expected 'dims' followed by " + std::to_string(top + 1) + " values");
  CochainComplex c;
  for (std::size_t p = 0; p <= top; ++p) c.dims.push_back(parse_size(in, toks[p + 1]));
  for (std::size_t p = 0; p < top; ++p) {
    toks = split_ws(in.next());
    if (toks.size() != 3 || toks[0] != "differential" || toks[1] != std::to_string(p))
      in.fail("expected 'differential " + std::to_string(p) + " RxC'");
    const auto [r, k] = detail::parse_shape(in, toks[2]);
    if (r != c.dims[p + 1] || k != c.dims[p]) in.fail("differential shape disagrees with dims");
    std::string body = in.block(r);
    try {
      c.differentials.push_back(parse_matrix(body, r, k));
    } catch (const std::invalid_argument& e) {
      in.fail(e.what());
    }
  }
  if (in.next() != "end") in.fail("expected 'end'");
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  return c;
}

}  // namespace ncfin
