#ifndef NCFIN_POLYNOMIAL_HPP
#define NCFIN_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ncfin/rational.hpp"

namespace ncfin {

/// Univariate polynomial in n with exact rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  /// coefficients[k] multiplies n^k; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coefficients);

  /// C(n - shift, k) expanded in the power basis.
  static Polynomial binomial_basis(std::size_t k, std::int64_t shift);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. `1/2*n^2 - 1/2*n`, `0` for the zero polynomial.
  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace ncfin

#endif  // NCFIN_POLYNOMIAL_HPP
