// Long-running tier: basis families at size 5 (dimensions 541 / 368 / 240).
#include <cstdio>

#include "wqsym/verify.hpp"

int main() {
  wqsym::verify::CheckResult r = wqsym::verify::check_bases(5);
  const std::string suffix = r.passed ? "" : " -- " + r.detail;
  std::printf("[%s] slow tier: basis families at size 5 (%.1fs)%s\n",
              r.passed ? "PASS" : "FAIL", r.seconds, suffix.c_str());
  return r.passed ? 0 : 1;
}
