// One PASS/FAIL line per acceptance criterion, each with its time budget.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ncfin/acceptance.hpp"

namespace {

// Wall-clock budget per criterion in seconds; criterion 10 also bounds the whole run.
constexpr double kBudget[] = {1, 10, 30, 30, 60, 120, 120, 60, 10, 300};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  ncfin::AcceptanceReport first;
  first.seed = seed;
  int failures = 0;
  for (int id = 1; id <= ncfin::kCriterionCount; ++id) {
    const auto t0 = Clock::now();
    ncfin::CriterionResult r = ncfin::run_criterion(id, seed);
    double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    bool pass = r.pass && seconds < kBudget[id - 1];
    std::string detail = r.detail;
    if (id == ncfin::kCriterionCount && pass) {
      // Determinism: a second full run must reproduce the report byte for byte.
      first.results.push_back(r);
      const ncfin::AcceptanceReport second = ncfin::run_acceptance(seed);
      const bool same = second.str() == first.str();
      const double total = std::chrono::duration<double>(Clock::now() - start).count();
      pass = same && total < kBudget[id - 1];
      detail += same ? "; second run byte-identical" : "; second run differs";
      detail += " (suite " + std::to_string(static_cast<int>(total)) + " s)";
    } else {
      first.results.push_back(r);
    }
    std::printf("criterion %2d: %s  %-22s %7.3f s (< %g s)  %s\n", id, pass ? "PASS" : "FAIL", r.title.c_str(), seconds,
                kBudget[id - 1], detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  std::printf("%d/%d criteria pass\n", ncfin::kCriterionCount - failures, ncfin::kCriterionCount);
  return failures == 0 ? 0 : 1;
}
