#ifndef NCFIN_DOLDKAN_HPP
#define NCFIN_DOLDKAN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ncfin/matrix.hpp"
#include "ncfin/module.hpp"
#include "ncfin/polynomial.hpp"

namespace ncfin {

/// Cochain complex C^0 -> C^1 -> ... -> C^top of finite-dimensional Q-spaces.
struct CochainComplex {
  std::vector<std::size_t> dims;     // dims[p] = dim C^p, p = 0..top
  std::vector<Matrix> differentials;  // differentials[p]: C^p -> C^{p+1}, p = 0..top-1

  std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
  /// Throws std::invalid_argument on a shape mismatch or d o d != 0.
  void validate() const;
};

/// The one-term complex Q in degree p.
CochainComplex shifted_unit(std::size_t p);

/// Normalized cochain complex of a Delta-module. Object [n] sits in degree
/// n-1: N^p is the common kernel of the p codegeneracies V[p+1] -> V[p], and
/// the differential is the alternating sum of the cofaces. Throws
/// std::runtime_error if V is not a functor on the structure maps involved.
CochainComplex conormalize(const CatModule& v);

/// The Delta-module corresponding to C, truncated at max_level:
/// V[n] = sum over monotone surjections [n] -> [p+1] of C^p.
CatModule realize(const CochainComplex& c, std::size_t max_level);

/// dim V[n] = sum_p m_p C(n-1, p).
struct DimPolynomial {
  std::vector<std::size_t> multiplicities;

  Rational operator()(std::size_t n) const;
  Polynomial expand() const;
  /// e.g. `C(n-1,1) + C(n-1,2)`.
  std::string str() const;
};

/// Multiplicities from conormalize(V), checked against dim V[n] for every
/// level. Throws std::runtime_error on disagreement.
DimPolynomial dim_polynomial(const CatModule& v);

/// Text format with header `cochain/1`.
std::string write_cochain(const CochainComplex& c);
CochainComplex read_cochain(std::string_view text);

}  // namespace ncfin

#endif  // NCFIN_DOLDKAN_HPP
