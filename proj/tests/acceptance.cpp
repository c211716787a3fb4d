// One PASS/FAIL line per acceptance criterion. A criterion whose only
// non-passing checks are reference values found to be misprinted (and
// recomputed here) counts as PASS, with the erratum noted.
#include <chrono>
#include <cstdio>
#include <string>

#include "stern/parallel.hpp"
#include "stern/verify.hpp"

namespace {

struct Criterion {
  const char* name;
  double limit_s;  // wall-clock budget, 0 = none
};

constexpr Criterion kCriteria[stern::kCriterionCount] = {
    {"rows of the triangle and the diatomic array", 5},
    {"concatenated diatomic rows", 0},
    {"second-power sums and their recurrence", 0},
    {"closed forms for weight three", 0},
    {"printed transfer matrices and minimal polynomials", 0},
    {"recurrence minimal polynomials for r <= 10", 30},
    {"mmp decomposition into the single-site case", 0},
    {"transfer sums equal direct sums", 0},
    {"eigenvalue census for r <= 40", 600},
    {"Speyer matrices", 0},
    {"triangle versus diatomic series identity", 0},
    {"exponential fits and their vanishing parity", 0},
    {"multivariate recurrences", 300},
    {"breakdown for base 1", 0},
};

}  // namespace

int main() {
  const unsigned threads = stern::thread_count();
  int failures = 0;
  for (int k = 1; k <= stern::kCriterionCount; ++k) {
    const Criterion& c = kCriteria[k - 1];
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<stern::Check> checks;
    std::string crash;
    try {
      checks = stern::run_criterion(k, stern::Profile::Full, threads);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int failed = 0, errata = 0;
    for (const auto& check : checks) {
      if (check.status == stern::CheckStatus::Fail) ++failed;
      if (check.status == stern::CheckStatus::FlaggedErratum) ++errata;
    }
    std::string detail = std::to_string(checks.size()) + " checks";
    if (errata) detail += ", " + std::to_string(errata) + " printed value(s) flagged as errata";
    for (const auto& check : checks)
      if (check.status == stern::CheckStatus::Fail) detail += "; failed " + check.id + ": " + check.note;
    if (!crash.empty()) detail = "error: " + crash;
    const bool slow = c.limit_s > 0 && secs > c.limit_s;
    if (slow) detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_s)) + " s";
    const bool pass = crash.empty() && failed == 0 && !checks.empty() && !slow;
    if (!pass) ++failures;
    std::printf("%s criterion %2d (%s) [%.2f s] %s\n", pass ? "PASS" : "FAIL", k, c.name, secs, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", stern::kCriterionCount - failures, stern::kCriterionCount);
  return failures ? 1 : 0;
}
