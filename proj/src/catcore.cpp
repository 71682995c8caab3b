#include "ncfin/catcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace ncfin {

std::string_view category_name(Category cat) {
  switch (cat) {
    case Category::Delta: return "Delta";
    case Category::N: return "N";
    case Category::F: return "F";
    case Category::FI: return "FI";
  }
  return "?";
}

Category parse_category(std::string_view name) {
  if (name == "Delta") return Category::Delta;
  if (name == "N") return Category::N;
  if (name == "F") return Category::F;
  if (name == "FI") return Category::FI;
  throw std::invalid_argument("unknown category '" + std::string(name) + "' (expected Delta, N, F or FI)");
}

// ---------------------------------------------------------------------------
// SetMap

SetMap::SetMap(std::size_t cod, std::vector<std::size_t> values) : cod_(cod), values_(std::move(values)) {
  for (std::size_t v : values_)
    if (v < 1 || v > cod_)
      throw std::invalid_argument("set map value " + std::to_string(v) + " outside [1," +
                                  std::to_string(cod_) + "]");
}

SetMap SetMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  return SetMap(n, std::move(v));
}

bool SetMap::is_injective() const { return image_size() == dom(); }

bool SetMap::is_surjective() const { return image_size() == cod(); }

bool SetMap::is_monotone() const { return std::is_sorted(values_.begin(), values_.end()); }

std::size_t SetMap::image_size() const {
  std::vector<bool> hit(cod_ + 1, false);
  std::size_t count = 0;
  for (std::size_t v : values_)
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  return count;
}

SetMap compose(const SetMap& g, const SetMap& f) {
  if (f.cod() != g.dom())
    throw std::invalid_argument("cannot compose: f has codomain " + std::to_string(f.cod()) +
                                " but g has domain " + std::to_string(g.dom()));
  std::vector<std::size_t> v(f.dom());
  for (std::size_t x = 1; x <= f.dom(); ++x) v[x - 1] = g(f(x));
  return SetMap(g.cod(), std::move(v));
}

// ---------------------------------------------------------------------------
// NMor

NMor::NMor(SetMap map, std::vector<std::vector<std::size_t>> fibers)
    : map_(std::move(map)), fibers_(std::move(fibers)) {
  if (fibers_.size() != map_.cod())
    throw std::invalid_argument("expected " + std::to_string(map_.cod()) + " fiber orders, got " +
                                std::to_string(fibers_.size()));
  std::vector<bool> seen(map_.dom() + 1, false);
  for (std::size_t y = 1; y <= map_.cod(); ++y) {
    std::size_t expected = 0;
    for (std::size_t v : map_.values())
      if (v == y) ++expected;
    const auto& fib = fibers_[y - 1];
    if (fib.size() != expected)
      throw std::invalid_argument("fiber order over " + std::to_string(y) + " has wrong size");
    for (std::size_t x : fib) {
      if (x < 1 || x > map_.dom() || map_(x) != y || seen[x])
        throw std::invalid_argument("fiber order over " + std::to_string(y) +
                                    " is not a permutation of the preimage");
      seen[x] = true;
    }
  }
}

NMor NMor::identity(std::size_t n) { return lift(SetMap::identity(n), LiftMode::Injection); }

std::size_t NMor::fiber_position(std::size_t x) const {
  const auto& fib = fibers_[map_(x) - 1];
  return static_cast<std::size_t>(std::find(fib.begin(), fib.end(), x) - fib.begin());
}

std::strong_ordering operator<=>(const NMor& lhs, const NMor& rhs) {
  if (auto c = lhs.dom() <=> rhs.dom(); c != 0) return c;
  if (auto c = lhs.cod() <=> rhs.cod(); c != 0) return c;
  if (auto c = lhs.map_.values() <=> rhs.map_.values(); c != 0) return c;
  return lhs.fibers_ <=> rhs.fibers_;
}

NMor compose(const NMor& g, const NMor& f) {
  SetMap m = compose(g.map(), f.map());
  std::vector<std::vector<std::size_t>> fibers(g.cod());
  for (std::size_t z = 1; z <= g.cod(); ++z) {
    auto& out = fibers[z - 1];
    for (std::size_t y : g.fiber(z)) {
      const auto& inner = f.fiber(y);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  return NMor(std::move(m), std::move(fibers));
}

namespace {

std::vector<std::vector<std::size_t>> increasing_fibers(const SetMap& m) {
  std::vector<std::vector<std::size_t>> fibers(m.cod());
  for (std::size_t x = 1; x <= m.dom(); ++x) fibers[m(x) - 1].push_back(x);
  return fibers;
}

bool fibers_increasing(const NMor& f) {
  for (const auto& fib : f.fibers())
    if (!std::is_sorted(fib.begin(), fib.end())) return false;
  return true;
}

}  // namespace

NMor lift(const SetMap& m, LiftMode mode) {
  switch (mode) {
    case LiftMode::Delta:
      if (!m.is_monotone()) throw std::invalid_argument("delta lift requires a monotone map");
      break;
    case LiftMode::Injection:
      if (!m.is_injective()) throw std::invalid_argument("injection lift requires an injective map");
      break;
    case LiftMode::Canonical:
      break;
  }
  return NMor(m, increasing_fibers(m));
}

SetMap forget(const NMor& f) { return f.map(); }

bool in_category(Category cat, const NMor& f) {
  switch (cat) {
    case Category::N: return true;
    case Category::F: return fibers_increasing(f);
    case Category::FI: return f.map().is_injective();
    case Category::Delta:
      return f.dom() >= 1 && f.cod() >= 1 && f.map().is_monotone() && fibers_increasing(f);
  }
  return false;
}

NMor normalize_morphism(Category cat, const NMor& f) {
  if (cat == Category::F) return lift(f.map(), LiftMode::Canonical);
  return f;
}

// ---------------------------------------------------------------------------
// Enumeration and counting

namespace {

void check_hom_args(Category cat, std::size_t m, std::size_t n) {
  if (cat == Category::Delta && (m == 0 || n == 0))
    throw std::invalid_argument("Delta has no object [0]");
}

// All value sequences of length m over 1..n accepted by `keep`, lexicographic.
template <typename Keep>
std::vector<std::vector<std::size_t>> value_sequences(std::size_t m, std::size_t n, Keep keep) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (n == 0) return out;
  std::vector<std::size_t> v(m, 1);
  while (true) {
    if (keep(v)) out.push_back(v);
    std::size_t pos = m;
    while (pos > 0 && v[pos - 1] == n) --pos;
    if (pos == 0) break;
    ++v[pos - 1];
    for (std::size_t j = pos; j < m; ++j) v[j] = 1;
  }
  return out;
}

void all_fiber_orders(const SetMap& m, std::size_t y, std::vector<std::vector<std::size_t>>& fibers,
                      std::vector<NMor>& out) {
  if (y > m.cod()) {
    out.emplace_back(m, fibers);
    return;
  }
  auto& fib = fibers[y - 1];
  std::sort(fib.begin(), fib.end());
  do {
    all_fiber_orders(m, y + 1, fibers, out);
  } while (std::next_permutation(fib.begin(), fib.end()));
  std::sort(fib.begin(), fib.end());
}

}  // namespace

std::vector<NMor> enumerate_hom(Category cat, std::size_t m, std::size_t n) {
  check_hom_args(cat, m, n);
  std::vector<NMor> out;
  auto any = [](const std::vector<std::size_t>&) { return true; };
  switch (cat) {
    case Category::N: {
      for (auto& v : value_sequences(m, n, any)) {
        SetMap map(n, std::move(v));
        auto fibers = increasing_fibers(map);
        all_fiber_orders(map, 1, fibers, out);
      }
      break;
    }
    case Category::F:
      for (auto& v : value_sequences(m, n, any)) out.push_back(lift(SetMap(n, std::move(v)), LiftMode::Canonical));
      break;
    case Category::FI: {
      auto injective = [n](const std::vector<std::size_t>& v) {
        std::vector<bool> hit(n + 1, false);
        for (std::size_t x : v) {
          if (hit[x]) return false;
          hit[x] = true;
        }
        return true;
      };
      if (m <= n)
        for (auto& v : value_sequences(m, n, injective))
          out.push_back(lift(SetMap(n, std::move(v)), LiftMode::Injection));
      break;
    }
    case Category::Delta: {
      auto monotone = [](const std::vector<std::size_t>& v) { return std::is_sorted(v.begin(), v.end()); };
      for (auto& v : value_sequences(m, n, monotone)) out.push_back(lift(SetMap(n, std::move(v)), LiftMode::Delta));
      break;
    }
  }
  return out;
}

mpz_class hom_count(Category cat, std::size_t m, std::size_t n) {
  check_hom_args(cat, m, n);
  mpz_class out = 1;
  switch (cat) {
    case Category::N:
      for (std::size_t j = 0; j < m; ++j) out *= static_cast<unsigned long>(n + j);
      break;
    case Category::F:
      mpz_ui_pow_ui(out.get_mpz_t(), n, m);
      break;
    case Category::FI:
      if (m > n) return 0;
      for (std::size_t j = 0; j < m; ++j) out *= static_cast<unsigned long>(n - j);
      break;
    case Category::Delta:
      mpz_bin_uiui(out.get_mpz_t(), n + m - 1, m);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization and elementary morphisms

Factorization factorize(const NMor& f) {
  const std::size_t m = f.dom();
  const std::size_t n = f.cod();
  // Domain elements listed fiber by fiber; sigma sends x to its slot.
  std::vector<std::size_t> sigma_values(m);
  std::vector<std::size_t> pi_values;
  std::vector<std::size_t> iota_values;
  std::size_t slot = 0;
  for (std::size_t y = 1; y <= n; ++y) {
    const auto& fib = f.fiber(y);
    if (fib.empty()) continue;
    iota_values.push_back(y);
    for (std::size_t x : fib) {
      sigma_values[x - 1] = ++slot;
      pi_values.push_back(iota_values.size());
    }
  }
  const std::size_t r = iota_values.size();
  return Factorization{lift(SetMap(m, std::move(sigma_values)), LiftMode::Injection),
                       lift(SetMap(r, std::move(pi_values)), LiftMode::Delta),
                       lift(SetMap(n, std::move(iota_values)), LiftMode::Injection)};
}

NMor coface(std::size_t n, std::size_t i) {
  if (i < 1 || i > n + 1) throw std::invalid_argument("coface index out of range");
  std::vector<std::size_t> v(n);
  for (std::size_t j = 1; j <= n; ++j) v[j - 1] = j < i ? j : j + 1;
  return lift(SetMap(n + 1, std::move(v)), LiftMode::Delta);
}

NMor codegeneracy(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw std::invalid_argument("codegeneracy index out of range");
  std::vector<std::size_t> v(n + 1);
  for (std::size_t j = 1; j <= n + 1; ++j) v[j - 1] = j <= i ? j : j - 1;
  return lift(SetMap(n, std::move(v)), LiftMode::Delta);
}

NMor transposition(std::size_t n, std::size_t i) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("transposition index out of range");
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return lift(SetMap(n, std::move(v)), LiftMode::Injection);
}

// ---------------------------------------------------------------------------
// Random morphisms

std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below(0)");
  // Rejection sampling keeps the result unbiased and independent of the stdlib.
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

NMor random_morphism(Category cat, std::size_t m, std::size_t n, std::mt19937_64& rng) {
  check_hom_args(cat, m, n);
  if (m > 0 && n == 0) throw std::invalid_argument("no morphisms into [0] from a nonempty set");
  auto shuffle = [&rng](std::vector<std::size_t>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[uniform_below(rng, k)]);
  };
  switch (cat) {
    case Category::N:
    case Category::F: {
      std::vector<std::size_t> v(m);
      for (auto& x : v) x = 1 + uniform_below(rng, n);
      SetMap map(n, std::move(v));
      if (cat == Category::F) return lift(map, LiftMode::Canonical);
      auto fibers = increasing_fibers(map);
      for (auto& fib : fibers) shuffle(fib);
      return NMor(std::move(map), std::move(fibers));
    }
    case Category::FI: {
      if (m > n) throw std::invalid_argument("no injections [m] -> [n] with m > n");
      std::vector<std::size_t> pool(n);
      std::iota(pool.begin(), pool.end(), 1);
      shuffle(pool);
      pool.resize(m);
      return lift(SetMap(n, std::move(pool)), LiftMode::Injection);
    }
    case Category::Delta: {
      // Stars and bars: an m-subset c_1 < ... < c_m of [n+m-1] gives v_i = c_i - (i-1).
      std::vector<std::size_t> pool(n + m - 1);
      std::iota(pool.begin(), pool.end(), 1);
      for (std::size_t k = 0; k < m; ++k) std::swap(pool[k], pool[k + uniform_below(rng, pool.size() - k)]);
      pool.resize(m);
      std::sort(pool.begin(), pool.end());
      for (std::size_t k = 0; k < m; ++k) pool[k] -= k;
      return lift(SetMap(n, std::move(pool)), LiftMode::Delta);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("morphism text, column " + std::to_string(pos_ + 1) + ": " + what +
                                " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

SetMap parse_map_head(Cursor& cur) {
  std::size_t m = cur.number();
  cur.expect("->");
  std::size_t n = cur.number();
  cur.expect(":");
  std::vector<std::size_t> values;
  if (m > 0) {
    values.push_back(cur.number());
    while (cur.accept(",")) values.push_back(cur.number());
  }
  if (values.size() != m)
    cur.fail("expected " + std::to_string(m) + " values, found " + std::to_string(values.size()));
  try {
    return SetMap(n, std::move(values));
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

}  // namespace

std::string format_set_map(const SetMap& m) {
  std::string out = std::to_string(m.dom()) + "->" + std::to_string(m.cod()) + ":";
  if (m.dom() > 0) out += " " + join(m.values(), ",");
  return out;
}

std::string format_morphism(const NMor& f) {
  std::string out = format_set_map(f.map());
  if (f.dom() == 0) return out;
  out += " | orders: ";
  bool first = true;
  for (std::size_t y = 1; y <= f.cod(); ++y) {
    if (f.fiber(y).empty()) continue;
    if (!first) out += "; ";
    first = false;
    out += std::to_string(y) + ":(" + join(f.fiber(y), ",") + ")";
  }
  return out;
}

SetMap parse_set_map(std::string_view text) {
  Cursor cur(text);
  SetMap m = parse_map_head(cur);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return m;
}

NMor parse_morphism(std::string_view text) {
  Cursor cur(text);
  SetMap m = parse_map_head(cur);
  auto fibers = increasing_fibers(m);
  if (cur.accept("|")) {
    cur.expect("orders:");
    std::vector<bool> given(m.cod() + 1, false);
    while (!cur.done()) {
      std::size_t y = cur.number();
      if (y < 1 || y > m.cod()) cur.fail("fiber index " + std::to_string(y) + " out of range");
      if (given[y]) cur.fail("fiber " + std::to_string(y) + " listed twice");
      given[y] = true;
      cur.expect(":");
      cur.expect("(");
      std::vector<std::size_t> order;
      if (!cur.peek(')')) {
        order.push_back(cur.number());
        while (cur.accept(",")) order.push_back(cur.number());
      }
      cur.expect(")");
      fibers[y - 1] = std::move(order);
      if (!cur.accept(";")) break;
    }
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  try {
    return NMor(std::move(m), std::move(fibers));
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

std::size_t NMorHash::operator()(const NMor& f) const {
  std::size_t h = std::hash<std::size_t>{}(f.dom() * 131 + f.cod());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (std::size_t v : f.map().values()) mix(v);
  for (const auto& fib : f.fibers())
    for (std::size_t x : fib) mix(x);
  return h;
}

}  // namespace ncfin
