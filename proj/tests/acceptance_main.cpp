// Acceptance suite: runs every release criterion and prints one line each.
#include <cstdio>

#include "wqsym/verify.hpp"

int main() {
  using namespace wqsym::verify;
  std::vector<CheckResult> results;
  auto run = [&](int number, const char* title, CheckResult r) {
    const std::string suffix = r.passed ? "" : " -- " + r.detail;
    std::printf("[%s] criterion %2d: %-52s (%.2fs)%s\n", r.passed ? "PASS" : "FAIL",
                number, title, r.seconds, suffix.c_str());
    std::fflush(stdout);
    results.push_back(std::move(r));
  };

  run(1, "counting tables up to size 7", check_counts(7));
  run(2, "forest bijection roundtrips and weights up to size 6", check_bijections(6));
  run(3, "unlabeled biplane forest counts", check_forest_counts(8, 5));
  run(4, "bidendriform axioms up to total degree 5", check_axioms(5));
  run(5, "duality adjointness up to total degree 5", check_duality(5));
  run(6, "worked reference examples", check_worked_examples());
  run(7, "basis families and kernel dimensions up to size 4", check_bases(4));
  run(8, "reference change-of-basis matrices", check_annex_matrices());
  run(9, "paired basis expansion table (sizes <= 3)", check_automorphism_table());
  run(10, "involution properties and tables", [] {
    CheckResult a = check_involution(6);
    if (!a.passed) return a;
    CheckResult b = check_involution_tables();
    if (!b.passed) {
      b.seconds += a.seconds;
      return b;
    }
    a.seconds += b.seconds;
    return a;
  }());
  run(11, "isomorphism invertibility and morphism identities", check_sigma(4));
  run(12, "dimension series identities up to degree 7", check_series(7));

  int failed = 0;
  for (const auto& r : results)
    if (!r.passed) ++failed;
  if (failed) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", results.size());
  return 0;
}
