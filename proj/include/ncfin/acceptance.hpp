#ifndef NCFIN_ACCEPTANCE_HPP
#define NCFIN_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ncfin {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Deterministic one-line summary (no timings).
  std::string detail;
};

/// Number of acceptance criteria run by run_criterion.
inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..kCriterionCount). Criterion 10 covers the file
/// round trips; comparing two whole reports is left to the caller.
CriterionResult run_criterion(int id, std::uint64_t seed);

struct AcceptanceReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> results;
  bool all_pass() const;
  /// Summary table, byte-identical for equal seeds.
  std::string str() const;
};

AcceptanceReport run_acceptance(std::uint64_t seed);

/// Coefficient of t^i in (1+t)(1+2t)...(1+(n-1)t), by multiplying out the
/// product. Independent of the admissible-monomial enumeration.
std::uint64_t stirling_product_coefficient(std::size_t i, std::size_t n);

}  // namespace ncfin

#endif  // NCFIN_ACCEPTANCE_HPP
