#include "ncfin/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ncfin {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i64(std::int64_t v) {
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), v);
  return out;
}

}  // namespace

Rational::Rational(unsigned long value) {
  if (value > static_cast<unsigned long>(std::numeric_limits<std::int64_t>::max())) {
    mpz_class z;
    mpz_set_ui(z.get_mpz_t(), value);
    assign(mpq_class(z));
  } else {
    num_ = static_cast<std::int64_t>(value);
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  set_small(num, den);
}

Rational::Rational(const mpz_class& value) { assign(mpq_class(value)); }

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  assign(std::move(copy));
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpq_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign(mpq_class&& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t()) &&
      n != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) {
    *big_ = std::move(value);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void Rational::set_small(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits_small(num) && fits_small(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  // Reduced 128-bit value still too wide: rebuild through GMP from 64-bit halves.
  auto to_mpz = [](i128 v) {
    bool negative = v < 0;
    u128 mag = abs128(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(mag >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(mag));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
  };
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i64(num_), mpz_from_i64(den_));
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      set_small(static_cast<i128>(num_) + rhs.num_, 1);
    } else {
      set_small(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      set_small(static_cast<i128>(num_) - rhs.num_, 1);
    } else {
      set_small(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    *this = Rational();
    return *this;
  }
  if (!big_ && !rhs.big_) {
    set_small(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    set_small(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    i128 prod = static_cast<i128>(a.num_) * b.num_;
    set_small(prod + num_, 1);
    return;
  }
  *this += a * b;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  // Canonical storage: a big value never equals a small one.
  return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    i128 l = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 r = static_cast<i128>(rhs.num_) * lhs.den_;
    return l <=> r;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return Rational();
  if (n >= 0 && k > n) return Rational();
  Rational out(1);
  for (std::int64_t j = 0; j < k; ++j) {
    out *= Rational(n - j);
    out /= Rational(j + 1);
  }
  return out;
}

}  // namespace ncfin
