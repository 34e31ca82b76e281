// Verification suites shared by the command line tool and the acceptance
// tests.  Each check returns a pass/fail result with a short detail string.
#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace wqsym::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

CheckResult check_counts(int max_n);
CheckResult check_bijections(int max_n);
CheckResult check_forest_counts(int formula_max_n, int enum_max_n);
CheckResult check_axioms(int max_total_degree);
CheckResult check_duality(int max_total_degree);
CheckResult check_bases(int max_n);
CheckResult check_projectors(int max_n);
CheckResult check_annex_matrices();
CheckResult check_automorphism_table();
CheckResult check_involution(int max_n);
CheckResult check_involution_tables();
CheckResult check_sigma(int max_n);
CheckResult check_series(int max_n);
CheckResult check_worked_examples();

// suite in {dims, bijections, axioms, bases, duality, iso, series, all}.
Report run_suite(const std::string& suite, int max_size);

}  // namespace wqsym::verify
