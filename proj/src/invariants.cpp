#include "ncfin/invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace ncfin {

namespace {

void require_symmetric_action(const CatModule& v, std::size_t n) {
  if (v.category() == Category::Delta) throw std::invalid_argument("Delta-modules carry no symmetric group action");
  if (n > v.max_level()) throw std::out_of_range("level " + std::to_string(n) + " exceeds truncation");
}

// The transposition (i k) of [n] as a morphism; i == k gives the identity.
NMor swap_of(std::size_t n, std::size_t i, std::size_t k) {
  std::vector<std::size_t> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::swap(values[i - 1], values[k - 1]);
  return lift(SetMap(n, std::move(values)), LiftMode::Injection);
}

}  // namespace

Matrix averaging_projector(const CatModule& v, std::size_t n) {
  require_symmetric_action(v, n);
  Matrix proj = Matrix::identity(v.dim(n));
  for (std::size_t k = 2; k <= n; ++k) {
    Matrix coset_sum(v.dim(n), v.dim(n));
    for (std::size_t i = 1; i <= k; ++i) coset_sum += v.act(swap_of(n, i, k));
    proj = coset_sum * proj;
    proj *= Rational(1) / Rational(static_cast<long>(k));
  }
  return proj;
}

InvariantBasis invariants_basis(const CatModule& v, std::size_t n) {
  InvariantBasis out;
  out.level = n;
  out.projector = averaging_projector(v, n);
  out.basis = column_space(out.projector);
  return out;
}

Matrix barred_map(const CatModule& v, const NMor& f) {
  require_symmetric_action(v, f.dom());
  require_symmetric_action(v, f.cod());
  InvariantBasis src = invariants_basis(v, f.dom());
  InvariantBasis dst = invariants_basis(v, f.cod());
  Matrix image = dst.projector * (v.act(f) * src.basis);
  auto coords = solve(dst.basis, image);
  if (!coords) throw std::logic_error("barred_map: averaged image left the invariant subspace");
  return *coords;
}

Matrix barred_map(const CatModule& v, const SetMap& f) { return barred_map(v, lift(f, LiftMode::Canonical)); }

std::string MonotonicityReport::str() const {
  std::string out;
  for (const auto& [n, d] : dims) out += "n=" + std::to_string(n) + " dim=" + std::to_string(d) + "\n";
  out += pass ? "nondecreasing: yes\n" : "nondecreasing: no\n";
  return out;
}

MonotonicityReport monotonicity_check(const CatModule& v, std::size_t first, std::size_t last) {
  if (first < 1 || last > v.max_level() || first > last) throw std::out_of_range("monotonicity range out of bounds");
  MonotonicityReport report;
  for (std::size_t n = first; n <= last; ++n) {
    std::size_t d = invariants_basis(v, n).dim();
    if (!report.dims.empty() && d < report.dims.back().second) report.pass = false;
    report.dims.emplace_back(n, d);
  }
  return report;
}

SetMap replication_map(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("replication map needs n, m >= 1");
  std::vector<std::size_t> values(n * m);
  for (std::size_t x = 1; x <= n * m; ++x) values[x - 1] = (x - 1) / m + 1;
  return SetMap(n, std::move(values));
}

std::string ReplicationReport::str() const {
  std::string out = "replication n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
                    std::to_string(barred.rows()) + "x" + std::to_string(barred.cols());
  if (barred.rows() > 0 && barred.cols() > 0) out += " [" + format_matrix(barred) + "]";
  out += pass ? " invertible" : " not invertible";
  return out;
}

ReplicationReport replication_iso_check(const CatModule& v, std::size_t n, std::size_t m) {
  if (n * m > v.max_level()) throw std::out_of_range("replication needs n*m <= truncation level");
  ReplicationReport report;
  report.n = n;
  report.m = m;
  report.barred = barred_map(v, replication_map(n, m));
  report.pass = report.barred.rows() == report.barred.cols() && rank(report.barred) == report.barred.rows();
  return report;
}

}  // namespace ncfin
