#ifndef NCFIN_INVARIANTS_HPP
#define NCFIN_INVARIANTS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncfin/catcore.hpp"
#include "ncfin/matrix.hpp"
#include "ncfin/module.hpp"

namespace ncfin {

/// (1/n!) sum over sigma in S_n of V(sigma), built as a product over the
/// coset decomposition S_k = U_i (i k) S_{k-1} rather than by summing n!
/// matrices.
Matrix averaging_projector(const CatModule& v, std::size_t n);

struct InvariantBasis {
  std::size_t level = 0;
  Matrix basis;      // columns span V[n]^{S_n}, in RREF order
  Matrix projector;  // the averaging projector at level n
  std::size_t dim() const { return basis.cols(); }
};

InvariantBasis invariants_basis(const CatModule& v, std::size_t n);

/// Matrix of V[n]^{S_n} -> V[n] -> V[n'] -> V[n']_{S_n'} = V[n']^{S_n'} in the
/// invariant bases, the last identification by averaging.
Matrix barred_map(const CatModule& v, const NMor& f);
/// Bare set maps use their canonical lift.
Matrix barred_map(const CatModule& v, const SetMap& f);

struct MonotonicityReport {
  std::vector<std::pair<std::size_t, std::size_t>> dims;  // (n, dim V[n]^{S_n})
  bool pass = true;
  std::string str() const;
};

MonotonicityReport monotonicity_check(const CatModule& v, std::size_t first, std::size_t last);

/// [nm] -> [n] collapsing the block {(j-1)m+1, ..., jm} to j.
SetMap replication_map(std::size_t n, std::size_t m);

struct ReplicationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Matrix barred;  // barred map of the replication map
  bool pass = false;
  std::string str() const;
};

/// Whether the barred replication map V[nm]^{S_nm} -> V[n]^{S_n} is invertible.
ReplicationReport replication_iso_check(const CatModule& v, std::size_t n, std::size_t m);

}  // namespace ncfin

#endif  // NCFIN_INVARIANTS_HPP
