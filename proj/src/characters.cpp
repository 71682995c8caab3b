#include "ncfin/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ncfin {

std::size_t Partition::size() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::size_t Partition::cycle_count(std::size_t j) const {
  return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), j));
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) {
      out.push_back({cur});
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

NMor permutation_of_type(const Partition& lambda) {
  const std::size_t n = lambda.size();
  std::vector<std::size_t> values(n);
  std::size_t start = 1;
  for (std::size_t len : lambda.parts) {
    for (std::size_t x = start; x < start + len; ++x) values[x - 1] = x + 1 < start + len ? x + 1 : start;
    start += len;
  }
  return lift(SetMap(n, std::move(values)), LiftMode::Injection);
}

Partition cycle_type(const SetMap& permutation) {
  if (permutation.dom() != permutation.cod() || !permutation.is_injective())
    throw std::invalid_argument("cycle_type needs a permutation");
  std::vector<bool> seen(permutation.dom() + 1, false);
  Partition out;
  for (std::size_t x = 1; x <= permutation.dom(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = permutation(y)) {
      seen[y] = true;
      ++len;
    }
    out.parts.push_back(len);
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

std::vector<std::pair<Partition, Rational>> character(const CatModule& v, std::size_t n) {
  if (n > v.max_level()) throw std::out_of_range("character: level exceeds truncation");
  if (v.category() == Category::Delta) throw std::invalid_argument("character: Delta has no symmetric group action");
  std::vector<std::pair<Partition, Rational>> out;
  for (auto& lambda : partitions(n)) {
    Matrix m = v.act(permutation_of_type(lambda));
    Rational trace;
    for (std::size_t i = 0; i < m.rows(); ++i) trace += m(i, i);
    out.emplace_back(std::move(lambda), std::move(trace));
  }
  return out;
}

std::string format_character_table(const std::vector<std::pair<Partition, Rational>>& table) {
  std::string out;
  for (const auto& [lambda, value] : table) out += lambda.str() + " " + value.str() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// CharacterPolynomial

std::size_t CharacterPolynomial::degree_of(const Exponents& e) {
  std::size_t d = 0;
  for (std::size_t j = 0; j < e.size(); ++j) d += (j + 1) * e[j];
  return d;
}

bool CharacterPolynomial::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const std::size_t da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void CharacterPolynomial::add_term(Exponents exponents, const Rational& coefficient) {
  while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
  Rational& c = terms_[exponents];
  c += coefficient;
  if (c.is_zero()) terms_.erase(exponents);
}

Rational CharacterPolynomial::evaluate(const Partition& lambda) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t j = 0; j < e.size() && !term.is_zero(); ++j)
      if (e[j] > 0) term *= binomial(static_cast<std::int64_t>(lambda.cycle_count(j + 1)), static_cast<std::int64_t>(e[j]));
    total += term;
  }
  return total;
}

std::size_t CharacterPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

std::string CharacterPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      const std::string x = "X" + std::to_string(j + 1);
      mono += e[j] == 1 ? x : "C(" + x + "," + std::to_string(e[j]) + ")";
    }
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

std::vector<CharacterPolynomial::Exponents> monomials_up_to(std::size_t d) {
  std::vector<CharacterPolynomial::Exponents> out;
  CharacterPolynomial::Exponents cur(d, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t budget) {
    if (j > d) {
      auto e = cur;
      while (!e.empty() && e.back() == 0) e.pop_back();
      out.push_back(std::move(e));
      return;
    }
    for (std::size_t m = 0; m * j <= budget; ++m) {
      cur[j - 1] = m;
      rec(j + 1, budget - m * j);
    }
    cur[j - 1] = 0;
  };
  rec(1, d);
  std::sort(out.begin(), out.end(), CharacterPolynomial::TermOrder{});
  return out;
}

std::string FitWitness::str() const {
  std::string out = "n = " + std::to_string(level) + ", class " + partition.str() + ": character " + observed.str();
  if (predicted) out += ", polynomial " + predicted->str();
  return out;
}

// ---------------------------------------------------------------------------
// Fitting

namespace {

Rational monomial_value(const CharacterPolynomial::Exponents& e, const Partition& lambda) {
  Rational v(1);
  for (std::size_t j = 0; j < e.size() && !v.is_zero(); ++j)
    if (e[j] > 0) v *= binomial(static_cast<std::int64_t>(lambda.cycle_count(j + 1)), static_cast<std::int64_t>(e[j]));
  return v;
}

}  // namespace

CharacterFit fit_character_polynomial(const CatModule& v, std::size_t d, const std::vector<std::size_t>& fit_levels,
                                      const std::vector<std::size_t>& test_levels) {
  for (std::size_t n : fit_levels)
    if (std::find(test_levels.begin(), test_levels.end(), n) != test_levels.end())
      throw std::invalid_argument("fit and test levels must be disjoint");
  for (const auto* levels : {&fit_levels, &test_levels})
    for (std::size_t n : *levels)
      if (n < 1 || n > v.max_level()) throw std::out_of_range("fit level " + std::to_string(n) + " out of range");

  const auto monomials = monomials_up_to(d);
  std::vector<std::pair<std::size_t, std::pair<Partition, Rational>>> rows;
  for (std::size_t n : fit_levels)
    for (auto& entry : character(v, n)) rows.push_back({n, std::move(entry)});

  auto system = [&](std::size_t count) {
    Matrix a(count, monomials.size());
    Matrix b(count, 1);
    for (std::size_t r = 0; r < count; ++r) {
      for (std::size_t k = 0; k < monomials.size(); ++k) a(r, k) = monomial_value(monomials[k], rows[r].second.first);
      b(r, 0) = rows[r].second.second;
    }
    return std::make_pair(std::move(a), std::move(b));
  };

  CharacterFit fit;
  auto [a, b] = system(rows.size());
  auto x = solve(a, b);
  if (!x) {
    // Smallest inconsistent prefix; its last row is the witness.
    std::size_t lo = 1, hi = rows.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto [pa, pb] = system(mid);
      if (solve(pa, pb)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    const auto& row = rows[lo - 1];
    fit.outcome = CharacterFit::Outcome::Inconsistent;
    fit.witness = FitWitness{row.first, row.second.first, row.second.second, std::nullopt};
    return fit;
  }
  fit.unique = rank(a) == monomials.size();
  CharacterPolynomial poly;
  for (std::size_t k = 0; k < monomials.size(); ++k)
    if (!(*x)(k, 0).is_zero()) poly.add_term(monomials[k], (*x)(k, 0));
  fit.polynomial = poly;
  for (std::size_t n : test_levels)
    for (const auto& [lambda, value] : character(v, n)) {
      Rational predicted = poly.evaluate(lambda);
      if (predicted != value) {
        fit.outcome = CharacterFit::Outcome::TestMismatch;
        fit.witness = FitWitness{n, lambda, value, predicted};
        return fit;
      }
    }
  return fit;
}

DimensionFit fit_dimension_polynomial(const std::vector<Rational>& seq, std::size_t d) {
  if (seq.size() < d + 2)
    throw std::invalid_argument("fit_dimension_polynomial needs at least d + 2 = " + std::to_string(d + 2) + " values");
  // Forward differences at n = 1 give P(n) = sum_k delta_k C(n-1, k).
  std::vector<Rational> diffs(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(d + 1));
  std::vector<Rational> leading;
  for (std::size_t k = 0; k <= d; ++k) {
    leading.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  Polynomial poly;
  for (std::size_t k = 0; k <= d; ++k) {
    Polynomial term = Polynomial::binomial_basis(k, 1);
    term *= leading[k];
    poly += term;
  }
  DimensionFit fit;
  fit.polynomial = poly;
  for (std::size_t i = d + 1; i < seq.size(); ++i) {
    const std::size_t n = i + 1;
    if (poly(Rational(static_cast<long>(n))) != seq[i]) {
      fit.failing_n = n;
      break;
    }
  }
  return fit;
}

}  // namespace ncfin
