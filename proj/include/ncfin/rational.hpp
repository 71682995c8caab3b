#ifndef NCFIN_RATIONAL_HPP
#define NCFIN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncfin {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as it fits. A default-constructed Rational is zero and never allocates,
/// which keeps dense matrices of mostly-zero entries cheap.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  // The inline form holds |num| <= INT64_MAX, so INT64_MIN takes the slow path.
  Rational(long value) : num_(value) {  // NOLINT(google-explicit-constructor)
    if (value == std::numeric_limits<long>::min()) set_small(value, 1);
  }
  Rational(long long value) : num_(value) {  // NOLINT(google-explicit-constructor)
    if (value == std::numeric_limits<long long>::min()) set_small(value, 1);
  }
  Rational(unsigned long value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpz_class& value);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses `p`, `-p` or `p/q` (q nonzero). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// `p` for integers, `p/q` otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  /// this += a * b, the inner step of every elimination loop.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  void assign(mpq_class&& value);
  void set_small(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Binomial coefficient C(n, k) as an exact rational; zero when k > n.
Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace ncfin

#endif  // NCFIN_RATIONAL_HPP
