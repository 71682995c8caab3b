#ifndef NCFIN_CHARACTERS_HPP
#define NCFIN_CHARACTERS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncfin/catcore.hpp"
#include "ncfin/module.hpp"
#include "ncfin/polynomial.hpp"
#include "ncfin/rational.hpp"

namespace ncfin {

/// Weakly decreasing positive parts; labels a conjugacy class of S_n.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t size() const;
  /// Number of parts equal to j, i.e. X_j on the class.
  std::size_t cycle_count(std::size_t j) const;
  /// `(2,1)`; the empty partition is `()`.
  std::string str() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions(std::size_t n);

/// The permutation of [n] whose cycles are consecutive blocks of the given lengths.
NMor permutation_of_type(const Partition& lambda);
Partition cycle_type(const SetMap& permutation);

/// Trace of V(sigma) for one sigma per cycle type, in partitions(n) order.
std::vector<std::pair<Partition, Rational>> character(const CatModule& v, std::size_t n);
/// One `partition value` line per class.
std::string format_character_table(const std::vector<std::pair<Partition, Rational>>& table);

/// Polynomial in the cycle counts X_1, X_2, ... over the basis prod_j C(X_j, m_j);
/// X_j has degree j.
class CharacterPolynomial {
 public:
  /// exponents[j-1] = m_j, trailing zeros trimmed.
  using Exponents = std::vector<std::size_t>;

  static std::size_t degree_of(const Exponents& e);

  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };

  void add_term(Exponents exponents, const Rational& coefficient);
  Rational evaluate(const Partition& lambda) const;
  /// Largest degree of a nonzero term; 0 for constants and the zero polynomial.
  std::size_t degree() const;
  const std::map<Exponents, Rational, TermOrder>& terms() const { return terms_; }
  /// Highest degree first, e.g. `C(X1,2) + X2`.
  std::string str() const;

  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

 private:
  std::map<Exponents, Rational, TermOrder> terms_;
};

/// All exponent vectors of degree <= d.
std::vector<CharacterPolynomial::Exponents> monomials_up_to(std::size_t d);

struct FitWitness {
  std::size_t level = 0;
  Partition partition;
  Rational observed;
  std::optional<Rational> predicted;  // set for test-level mismatches
  std::string str() const;
};

struct CharacterFit {
  enum class Outcome { Fitted, Inconsistent, TestMismatch };
  Outcome outcome = Outcome::Fitted;
  std::optional<CharacterPolynomial> polynomial;  // present unless Inconsistent
  std::optional<FitWitness> witness;
  bool unique = true;  // false when the fit system had free coefficients (set to 0)
  bool ok() const { return outcome == Outcome::Fitted; }
};

/// Exact solve for a degree-<= d character polynomial matching the character
/// of V on every class at fit_levels, then verification on test_levels.
CharacterFit fit_character_polynomial(const CatModule& v, std::size_t d, const std::vector<std::size_t>& fit_levels,
                                      const std::vector<std::size_t>& test_levels);

struct DimensionFit {
  std::optional<Polynomial> polynomial;
  std::optional<std::size_t> failing_n;  // first n where the sequence leaves the fit
  bool ok() const { return !failing_n.has_value(); }
};

/// seq[k] is the value at n = k + 1. Fits the first d+1 values by forward
/// differences and checks the rest. Needs seq.size() >= d + 2.
DimensionFit fit_dimension_polynomial(const std::vector<Rational>& seq, std::size_t d);

}  // namespace ncfin

#endif  // NCFIN_CHARACTERS_HPP
