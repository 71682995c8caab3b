#ifndef NCFIN_CATCORE_HPP
#define NCFIN_CATCORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ncfin {

/// The four categories of finite sets handled here. Objects are the standard
/// sets [n] = {1..n}, identified with n; Delta has no [0].
enum class Category { Delta, N, F, FI };

std::string_view category_name(Category cat);
/// Accepts "Delta", "N", "F", "FI" (case-sensitive). Throws std::invalid_argument.
Category parse_category(std::string_view name);

/// A map [dom] -> [cod]. Values are 1-based.
class SetMap {
 public:
  SetMap() = default;
  SetMap(std::size_t cod, std::vector<std::size_t> values);

  static SetMap identity(std::size_t n);

  std::size_t dom() const { return values_.size(); }
  std::size_t cod() const { return cod_; }
  const std::vector<std::size_t>& values() const { return values_; }
  /// Image of x in 1..dom.
  std::size_t operator()(std::size_t x) const { return values_[x - 1]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_monotone() const;
  std::size_t image_size() const;

  friend auto operator<=>(const SetMap&, const SetMap&) = default;

 private:
  std::size_t cod_ = 0;
  std::vector<std::size_t> values_;
};

/// Pointwise composite g o f.
SetMap compose(const SetMap& g, const SetMap& f);

/// A morphism of noncommutative finite sets: a set map with a total order on
/// every fiber. fiber(y) lists the preimage of y from smallest to largest in
/// that order.
class NMor {
 public:
  NMor() = default;
  /// Validates that fibers[y-1] is a permutation of the preimage of y.
  NMor(SetMap map, std::vector<std::vector<std::size_t>> fibers);

  static NMor identity(std::size_t n);

  std::size_t dom() const { return map_.dom(); }
  std::size_t cod() const { return map_.cod(); }
  const SetMap& map() const { return map_; }
  const std::vector<std::size_t>& fiber(std::size_t y) const { return fibers_[y - 1]; }
  const std::vector<std::vector<std::size_t>>& fibers() const { return fibers_; }

  /// Position of x inside its fiber order, 0-based.
  std::size_t fiber_position(std::size_t x) const;

  /// Values sequence first, then the concatenated fiber-order word.
  friend std::strong_ordering operator<=>(const NMor& lhs, const NMor& rhs);
  friend bool operator==(const NMor& lhs, const NMor& rhs) = default;

 private:
  SetMap map_;
  std::vector<std::vector<std::size_t>> fibers_;
};

/// Composite g o f: fibers of g o f are ordered first by the g-fiber position
/// of f(x), then by the f-fiber position of x.
NMor compose(const NMor& g, const NMor& f);

enum class LiftMode {
  Delta,      ///< monotone input, increasing fibers (the functor Delta -> N)
  Injection,  ///< injective input, the unique lift
  Canonical,  ///< any input, increasing fibers
};

NMor lift(const SetMap& m, LiftMode mode);
SetMap forget(const NMor& f);

/// Whether f is a morphism of `cat` in the embedding used throughout:
/// Delta morphisms are lifts of monotone maps between nonempty sets, FI
/// morphisms are lifts of injections, F morphisms are canonical lifts.
bool in_category(Category cat, const NMor& f);

/// The representative of f in `cat`: canonical lift for F, f itself otherwise.
NMor normalize_morphism(Category cat, const NMor& f);

/// Every morphism [m] -> [n] of `cat`, sorted by values then fiber words.
/// F morphisms come back as canonical lifts, FI and Delta as their unique lifts.
std::vector<NMor> enumerate_hom(Category cat, std::size_t m, std::size_t n);

/// Closed-form size of Hom([m], [n]).
mpz_class hom_count(Category cat, std::size_t m, std::size_t n);

/// f = iota o pi o sigma with sigma a bijection, pi the lift of a monotone
/// surjection and iota the lift of a monotone injection.
struct Factorization {
  NMor sigma;
  NMor pi;
  NMor iota;
};
Factorization factorize(const NMor& f);

/// Elementary morphisms (lifted). coface(n, i): [n] -> [n+1] missing i, for
/// 1 <= i <= n+1. codegeneracy(n, i): [n+1] -> [n] hitting i twice, for
/// 1 <= i <= n. transposition(n, i): [n] -> [n] swapping i and i+1.
NMor coface(std::size_t n, std::size_t i);
NMor codegeneracy(std::size_t n, std::size_t i);
NMor transposition(std::size_t n, std::size_t i);

/// Uniformly random morphism [m] -> [n] of `cat` (requires Hom nonempty).
NMor random_morphism(Category cat, std::size_t m, std::size_t n, std::mt19937_64& rng);

/// Uniform integer in [0, bound), stable across standard libraries.
std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound);

/// Text form `m->n: v1,...,vm | orders: y:(x,...); y:(x,...)`.
std::string format_morphism(const NMor& f);
/// Parses the text form. The `| orders:` clause may be omitted or partial;
/// unlisted fibers take increasing order. Throws std::invalid_argument.
NMor parse_morphism(std::string_view text);
/// Parses `m->n: v1,...,vm` (any orders clause is rejected).
SetMap parse_set_map(std::string_view text);
std::string format_set_map(const SetMap& m);

struct NMorHash {
  std::size_t operator()(const NMor& f) const;
};

}  // namespace ncfin

#endif  // NCFIN_CATCORE_HPP
