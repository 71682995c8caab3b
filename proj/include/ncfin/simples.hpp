#ifndef NCFIN_SIMPLES_HPP
#define NCFIN_SIMPLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ncfin/module.hpp"

namespace ncfin {

/// All k-subsets of [n] (1-based, each sorted), in lexicographic order.
std::vector<std::vector<std::size_t>> subset_basis(std::size_t n, std::size_t k);

struct SimpleSpec {
  enum class Kind { C, D0, D1 };
  Kind kind = Kind::C;
  std::size_t k = 1;  // only for C

  static SimpleSpec C(std::size_t k) { return {Kind::C, k}; }
  static SimpleSpec D0() { return {Kind::D0, 0}; }
  static SimpleSpec D1() { return {Kind::D1, 0}; }
  std::string name() const;
};

/// N-module for C_k, D0 or D1. C_k has basis the k-subsets S of [n] and
/// sends S to f(S) when |f(S)| = k, to 0 otherwise. D1 is Q at every nonempty
/// level with every map (1); D0 is Q at [0] only.
CatModule make_simple(SimpleSpec which, std::size_t max_level);

/// The same push-forward rule for C_k, as an F-module.
CatModule subset_module_f(std::size_t k, std::size_t max_level);

/// One-dimensional at every level, f acting by the product over fibers of the
/// sign of the fiber order. Not a functor (block reordering under composition
/// changes the sign); it exists as order-sensitive input for descends_through_phi.
CatModule fiber_sign_module(std::size_t max_level);

struct DescentReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::string witness;  // first pair f, f' with equal underlying map but different action
};

/// Checks act(f) = act(f') for all N-morphisms f, f' : [m] -> [n] with
/// forget(f) = forget(f'), m, n <= up_to.
DescentReport descends_through_phi(const CatModule& v, std::size_t up_to);

}  // namespace ncfin

#endif  // NCFIN_SIMPLES_HPP
