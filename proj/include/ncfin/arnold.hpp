#ifndef NCFIN_ARNOLD_HPP
#define NCFIN_ARNOLD_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncfin/catcore.hpp"
#include "ncfin/module.hpp"
#include "ncfin/rational.hpp"

namespace ncfin {

/// Product of generators w(a1,b1) ... w(ai,bi), each with a < b. Admissible
/// (a basis element) when b1 < b2 < ... < bi.
struct OSMonomial {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t degree() const { return pairs.size(); }
  bool admissible() const;
  /// `w(1,2)w(1,3)`; the empty monomial is `1`.
  std::string str() const;
  friend auto operator<=>(const OSMonomial&, const OSMonomial&) = default;
};

/// Rational combination of admissible monomials at a fixed level and degree.
class OSElement {
 public:
  OSElement(std::size_t level, std::size_t degree) : level_(level), degree_(degree) {}

  std::size_t level() const { return level_; }
  std::size_t degree() const { return degree_; }
  const std::map<OSMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const OSMonomial& m, const Rational& c);
  void add(const OSElement& other, const Rational& scale);

  /// `c * w(a,b)w(a,b) + c * ...`, sorted by monomial; `0` when empty.
  std::string str() const;

  friend bool operator==(const OSElement&, const OSElement&) = default;

 private:
  std::size_t level_;
  std::size_t degree_;
  std::map<OSMonomial, Rational> terms_;
};

/// Rewrites a product of generators (pairs in either order, a != b, indices
/// in 1..n) in the admissible basis using w(a,b) = w(b,a), anticommutativity,
/// w^2 = 0 and w(x,z)w(y,z) = w(x,y)w(y,z) - w(x,y)w(x,z) for x < y < z.
/// Throws std::invalid_argument on a bad index.
OSElement straighten(const std::vector<std::pair<std::size_t, std::size_t>>& generators, std::size_t n);

/// Admissible degree-i monomials at level n, sorted.
std::vector<OSMonomial> admissible_basis(std::size_t i, std::size_t n);

/// Number of admissible degree-i monomials at level n.
std::size_t arnold_dim(std::size_t i, std::size_t n);

/// Image of a monomial under f: w(a,b) goes to w(f(a),f(b)), or to 0 when
/// f(a) = f(b); the product is then straightened at level f.cod().
OSElement arnold_image(const SetMap& f, const OSMonomial& m);

/// Degree-i part of the Arnold algebra as an F-module. Construction runs a
/// functoriality certification and throws std::runtime_error if it fails.
CatModule arnold_module(std::size_t i, std::size_t max_level);

/// Parses the OSElement text form at the given level; the result is straightened.
OSElement parse_os_element(std::string_view text, std::size_t level);

}  // namespace ncfin

#endif  // NCFIN_ARNOLD_HPP
