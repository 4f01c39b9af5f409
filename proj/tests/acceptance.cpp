// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "prabhakar/verify.hpp"

using namespace prabhakar;
using verify::CheckResult;

namespace {

CheckResult combine(std::vector<CheckResult> parts) {
  CheckResult r{"", true, ""};
  for (const auto& p : parts) {
    r.passed = r.passed && p.passed;
    if (!r.detail.empty()) r.detail += " | ";
    r.detail += (p.passed ? "" : "FAILED ") + p.name + ": " + p.detail;
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    CheckResult (*run)();
  };
  const Criterion criteria[] = {
      {"mlf-laplace duality", [] { return verify::check_mlf_laplace_duality(); }},
      {"talbot vs euler oracle agreement", [] { return verify::check_laplace_method_agreement(); }},
      {"creep formula vs oracle", [] { return verify::check_creep_formula(); }},
      {"relaxation series vs oracle + outer ratio test",
       [] {
         return combine({verify::check_relaxation_series(),
                         verify::check_relaxation_ratio(verify::material_triplets())});
       }},
      {"classical reductions", [] { return verify::check_reductions(); }},
      {"operator reductions",
       [] {
         return combine({verify::check_operator_rl_order(), verify::check_operator_annihilation(),
                         verify::check_operator_caputo_linear()});
       }},
      {"caputo-fabrizio equivalence", [] { return verify::check_cf_equivalence(); }},
      {"end-to-end superposition", [] { return verify::check_end_to_end(); }},
  };

  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.passed) ++failed;
    std::printf("criterion %d %s: %s [%.2fs] %s\n", index, r.passed ? "PASS" : "FAIL", c.title, secs,
                r.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
