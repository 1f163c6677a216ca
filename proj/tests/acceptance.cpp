// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pfq/suite.hpp"

namespace {

struct Criterion {
  int number;
  const char *name;
  const char *block;
};

constexpr Criterion kCriteria[] = {
    {1, "tait-fidelity", "tait"},
    {2, "axiom-battery", "axioms"},
    {3, "inner-group-of-two-cycle-quandles", "inn-mn"},
    {4, "connected-decomposition-roundtrip", "ehrman"},
    {5, "induced-coset-homs", "induced-hom"},
    {6, "tower-propositions", "towers"},
    {7, "counterexample-probe", "counterexample"},
    {8, "inner-tower-density", "inn-density"},
    {9, "subquandle-complementation", "complementation"},
    {10, "normal-form-and-kei-invariant", "adtak"},
};

} // namespace

int main() {
  pfq::SuiteOptions opts; // fixed default seed: the run is reproducible
  int failed_criteria = 0;
  for (const auto &c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<pfq::CheckResult> results;
    std::string error;
    try {
      results = pfq::run_suite_block(c.block, opts);
    } catch (const std::exception &e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    int failures = error.empty() ? 0 : 1;
    for (const auto &r : results)
      if (!r.pass) ++failures;
    if (failures) ++failed_criteria;
    std::printf("[%s] %2d %s (%zu checks, %.2fs)\n",
                failures ? "FAIL" : "PASS", c.number, c.name, results.size(),
                seconds);
    if (!error.empty()) std::printf("       block error: %s\n", error.c_str());
    for (const auto &r : results)
      if (!r.pass)
        std::printf("       %s: %s\n", r.id.c_str(), r.witness.c_str());
  }
  if (failed_criteria)
    std::printf("%d criterion(s) failed\n", failed_criteria);
  else
    std::printf("all criteria passed\n");
  return failed_criteria ? 1 : 0;
}
