#ifndef NCFIN_MODULE_HPP
#define NCFIN_MODULE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncfin/catcore.hpp"
#include "ncfin/matrix.hpp"

namespace ncfin {

enum class ElementaryKind { Coface, Codegeneracy, Transposition };

/// One generator of the fixed elementary set used by explicit modules.
struct ElementaryGenerator {
  ElementaryKind kind;
  std::size_t level;  // n in coface(n,i), codegeneracy(n,i), transposition(n,i)
  std::size_t index;
  NMor morphism;
};

/// Elementary generators of `cat` between levels <= max_level, in file order:
/// for each level n, the transpositions of [n], then cofaces [n] -> [n+1],
/// then codegeneracies [n+1] -> [n]. Delta has no transpositions, FI no
/// codegeneracies.
std::vector<ElementaryGenerator> elementary_generators(Category cat, std::size_t max_level);

/// Composite in `cat` (for F the underlying composite, canonically lifted).
NMor compose_in(Category cat, const NMor& g, const NMor& f);

/// A functor from a category of finite sets to finite-dimensional Q-vector
/// spaces, truncated at max_level. Immutable; copies share the backend.
class CatModule {
 public:
  using Rule = std::function<Matrix(const NMor&)>;

  /// Module whose action is computed directly by `rule` (called only with
  /// validated morphisms of the category).
  static CatModule from_rule(Category cat, std::size_t max_level, std::vector<std::size_t> dims, Rule rule);

  /// Module given by one matrix per elementary generator, in
  /// elementary_generators order. Arbitrary morphisms are evaluated through
  /// factorize(); whether this is a functor is what check_functoriality tests.
  static CatModule from_elementary(Category cat, std::size_t max_level, std::vector<std::size_t> dims,
                                   std::vector<Matrix> blocks);

  Category category() const { return category_; }
  std::size_t max_level() const { return max_level_; }
  /// 1 for Delta, 0 otherwise.
  std::size_t min_level() const { return category_ == Category::Delta ? 1 : 0; }
  /// dims()[n] = dim V[n] for n = 0..max_level (entry 0 is unused for Delta).
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t n) const;

  /// Matrix of V(f), shape dim(cod) x dim(dom). Throws std::out_of_range past
  /// the truncation and std::invalid_argument for a morphism outside the category.
  Matrix act(const NMor& f) const;

  bool has_elementary_backend() const;
  /// Stored generator matrices; empty for rule-backed modules.
  const std::vector<Matrix>& elementary_blocks() const;

 private:
  class Backend;
  class RuleBackend;
  class ElementaryBackend;

  CatModule(Category cat, std::size_t max_level, std::vector<std::size_t> dims, std::shared_ptr<const Backend> backend);

  Category category_ = Category::N;
  std::size_t max_level_ = 0;
  std::vector<std::size_t> dims_;
  std::shared_ptr<const Backend> backend_;
};

/// Explicit copy of V: its action on each elementary generator, stored.
CatModule tabulate(const CatModule& v);

struct FunctorialityReport {
  bool pass = true;
  bool exhaustive = false;
  std::size_t pairs_checked = 0;
  std::string counterexample;  // empty on pass
};

/// Checks act(id) = I at every level and act(g o f) = act(g) act(f) on
/// composable pairs. Exhaustive when the number of composable pairs within
/// the truncation is at most `trials`, otherwise `trials` seeded random pairs.
FunctorialityReport check_functoriality(const CatModule& v, std::size_t trials, std::uint64_t seed);

/// Every composable pair with all three levels <= up_to.
FunctorialityReport check_functoriality_exhaustive(const CatModule& v, std::size_t up_to);

enum class Restriction {
  Psi,  ///< N-module -> Delta-module along Delta -> N
  Phi,  ///< F-module -> N-module along the forgetful functor N -> F
};
CatModule restrict_module(const CatModule& v, Restriction along);

/// Witness that V[n] is spanned by act(f)(e_j), with e_j a basis vector at a
/// level <= degree.
struct GenerationWitness {
  NMor morphism;
  std::size_t source_index;
};

struct GenerationCertificate {
  std::size_t degree = 0;
  /// False when only the top level itself spans, i.e. the truncation is too
  /// small to tell.
  bool certified = false;
  /// witnesses[n]: dim V[n] vectors spanning V[n].
  std::vector<std::vector<GenerationWitness>> witnesses;
};

GenerationCertificate generation_degree(const CatModule& v);
/// Re-evaluates every witness through act() and checks it spans.
bool verify_generation(const CatModule& v, const GenerationCertificate& cert);

CatModule direct_sum(const CatModule& v, const CatModule& w);

/// Q[Hom([q], -)] with the action by post-composition.
CatModule representable(Category cat, std::size_t q, std::size_t max_level);

/// One-dimensional at every object, every morphism acting by (1).
CatModule constant_module(Category cat, std::size_t max_level);

/// Text format with header `catmod/1`. Rule-backed modules are tabulated first.
std::string write_catmod(const CatModule& v);
/// Throws std::invalid_argument naming the offending line.
CatModule read_catmod(std::string_view text);

}  // namespace ncfin

#endif  // NCFIN_MODULE_HPP
