#include "ncfin/arnold.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>

namespace ncfin {

bool OSMonomial::admissible() const {
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (pairs[j].first >= pairs[j].second) return false;
    if (j > 0 && pairs[j - 1].second >= pairs[j].second) return false;
  }
  return true;
}

std::string OSMonomial::str() const {
  if (pairs.empty()) return "1";
  std::string out;
  for (const auto& [a, b] : pairs) out += "w(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

void OSElement::add(const OSMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OSElement::add(const OSElement& other, const Rational& scale) {
  for (const auto& [m, c] : other.terms_) add(m, c * scale);
}

std::string OSElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + " * " + m.str();
  }
  return out;
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

bool by_b_then_a(const Pair& p, const Pair& q) { return p.second != q.second ? p.second < q.second : p.first < q.first; }

}  // namespace

OSElement straighten(const std::vector<Pair>& generators, std::size_t n) {
  OSElement out(n, generators.size());
  std::vector<std::pair<Rational, std::vector<Pair>>> work;
  std::vector<Pair> start;
  for (auto [a, b] : generators) {
    if (a < 1 || b < 1 || a > n || b > n)
      throw std::invalid_argument("generator w(" + std::to_string(a) + "," + std::to_string(b) + ") outside [1," +
                                  std::to_string(n) + "]");
    if (a == b) throw std::invalid_argument("generator w(" + std::to_string(a) + "," + std::to_string(b) + ") has a = b");
    start.emplace_back(std::min(a, b), std::max(a, b));
  }
  work.emplace_back(Rational(1), std::move(start));
  // Each three-term rewrite replaces a repeated b = z by y < z, so the
  // multiset of b-values strictly decreases and the loop terminates.
  while (!work.empty()) {
    auto [coef, factors] = std::move(work.back());
    work.pop_back();
    // Insertion sort by (b, a); each adjacent swap of degree-one factors flips the sign.
    for (std::size_t i = 1; i < factors.size(); ++i)
      for (std::size_t j = i; j > 0 && by_b_then_a(factors[j], factors[j - 1]); --j) {
        std::swap(factors[j], factors[j - 1]);
        coef = -coef;
      }
    bool zero = false;
    std::size_t clash = factors.size();
    for (std::size_t j = 1; j < factors.size(); ++j) {
      if (factors[j] == factors[j - 1]) {
        zero = true;
        break;
      }
      if (factors[j].second == factors[j - 1].second) {
        clash = j - 1;
        break;
      }
    }
    if (zero) continue;
    if (clash == factors.size()) {
      out.add(OSMonomial{std::move(factors)}, coef);
      continue;
    }
    // w(x,z) w(y,z) = w(x,y) w(y,z) - w(x,y) w(x,z)
    const std::size_t x = factors[clash].first;
    const std::size_t y = factors[clash + 1].first;
    const std::size_t z = factors[clash].second;
    auto first = factors;
    first[clash] = {x, y};
    first[clash + 1] = {y, z};
    auto second = std::move(factors);
    second[clash] = {x, y};
    second[clash + 1] = {x, z};
    work.emplace_back(coef, std::move(first));
    work.emplace_back(-coef, std::move(second));
  }
  return out;
}

std::vector<OSMonomial> admissible_basis(std::size_t i, std::size_t n) {
  std::vector<OSMonomial> out;
  OSMonomial cur;
  auto rec = [&](auto&& self, std::size_t min_b) -> void {
    if (cur.pairs.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = min_b; b <= n; ++b)
      for (std::size_t a = 1; a < b; ++a) {
        cur.pairs.emplace_back(a, b);
        self(self, b + 1);
        cur.pairs.pop_back();
      }
  };
  rec(rec, 2);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t arnold_dim(std::size_t i, std::size_t n) { return admissible_basis(i, n).size(); }

OSElement arnold_image(const SetMap& f, const OSMonomial& m) {
  std::vector<Pair> gens;
  for (const auto& [a, b] : m.pairs) {
    if (a > f.dom() || b > f.dom()) throw std::invalid_argument("monomial index outside the domain of f");
    const std::size_t fa = f(a), fb = f(b);
    if (fa == fb) return OSElement(f.cod(), m.degree());
    gens.emplace_back(fa, fb);
  }
  return straighten(gens, f.cod());
}

CatModule arnold_module(std::size_t i, std::size_t max_level) {
  struct Tables {
    std::vector<std::vector<OSMonomial>> basis;
    std::vector<std::map<OSMonomial, std::size_t>> index;
  };
  auto tables = std::make_shared<Tables>();
  tables->basis.resize(max_level + 1);
  tables->index.resize(max_level + 1);
  std::vector<std::size_t> dims(max_level + 1);
  for (std::size_t n = 0; n <= max_level; ++n) {
    tables->basis[n] = admissible_basis(i, n);
    dims[n] = tables->basis[n].size();
    for (std::size_t k = 0; k < dims[n]; ++k) tables->index[n].emplace(tables->basis[n][k], k);
  }
  CatModule v = CatModule::from_rule(Category::F, max_level, std::move(dims), [tables](const NMor& f) {
    const auto& src = tables->basis[f.dom()];
    const auto& dst_index = tables->index[f.cod()];
    Matrix out(tables->basis[f.cod()].size(), src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
      const OSElement image = arnold_image(f.map(), src[k]);
      for (const auto& [m, c] : image.terms()) out(dst_index.at(m), k) = c;
    }
    return out;
  });
  // The generator rule is only a model of the action; certify it before use.
  constexpr std::size_t kExhaustiveLevel = 3;
  constexpr std::size_t kRandomPairs = 100;
  constexpr std::uint64_t kSeed = 0x5eed;
  FunctorialityReport exhaustive = check_functoriality_exhaustive(v, kExhaustiveLevel);
  if (!exhaustive.pass) throw std::runtime_error("arnold_module: functoriality failed: " + exhaustive.counterexample);
  FunctorialityReport sampled = check_functoriality(v, kRandomPairs, kSeed);
  if (!sampled.pass) throw std::runtime_error("arnold_module: functoriality failed: " + sampled.counterexample);
  return v;
}

OSElement parse_os_element(std::string_view text, std::size_t level) {
  auto fail = [&text](const std::string& what) -> void {
    throw std::invalid_argument("OS element '" + std::string(text) + "': " + what);
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::size_t {
    skip_ws();
    std::size_t start = pos, value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (pos == start) fail("expected a number at column " + std::to_string(pos + 1));
    return value;
  };
  skip_ws();
  std::optional<OSElement> out;
  if (text.substr(pos) == "0") return OSElement(level, 0);
  while (true) {
    skip_ws();
    std::size_t star = text.find('*', pos);
    if (star == std::string_view::npos) fail("expected 'c * monomial'");
    Rational coef = Rational::parse(text.substr(pos, star - pos));
    pos = star + 1;
    skip_ws();
    std::vector<Pair> gens;
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
    } else {
      while (pos < text.size() && text[pos] == 'w') {
        ++pos;
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        std::size_t a = number();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') fail("expected ','");
        ++pos;
        std::size_t b = number();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        gens.emplace_back(a, b);
      }
      if (gens.empty()) fail("expected a monomial at column " + std::to_string(pos + 1));
    }
    OSElement term = straighten(gens, level);
    if (!out) out.emplace(level, gens.size());
    if (out->degree() != gens.size()) fail("mixed degrees");
    out->add(term, coef);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') fail("expected '+' at column " + std::to_string(pos + 1));
    ++pos;
  }
  return *out;
}

}  // namespace ncfin
