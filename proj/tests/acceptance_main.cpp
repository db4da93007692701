// Acceptance harness: runs the eight verification suites and prints exactly
// one [PASS]/[FAIL] line per criterion. Exits 1 if any criterion fails.
// Workload knobs come from the environment: VEROLEF_RMAX (default 6),
// VEROLEF_CORPUS_RANDOM (default 50), VEROLEF_CI_BUDGET (default 12).
#include <cstdio>
#include <vector>

#include "verolef/verify.hpp"

int main() {
  using namespace verolef;
  const VerifyConfig cfg;
  std::printf("corpus: %d generated entries; r = 1..%d; sweep budget %d\n",
              cfg.random_count, cfg.r_max, cfg.ci_budget);

  const std::vector<Suite> suites = run_all_suites(cfg);
  bool all_pass = true;
  for (std::size_t idx = 0; idx < suites.size(); ++idx) {
    const Suite& s = suites[idx];
    all_pass = all_pass && s.pass;
    std::printf("[%s] criterion %zu (%s) — %s [%d checks]\n",
                s.pass ? "PASS" : "FAIL", idx + 1, s.name.c_str(),
                s.description.c_str(), s.checked);
    for (const CheckLine& line : s.lines)
      if (!line.pass)
        std::printf("       failed: %s%s%s\n", line.name.c_str(),
                    line.detail.empty() ? "" : " — ", line.detail.c_str());
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass"
                               : "ACCEPTANCE: FAILURES");
  return all_pass ? 0 : 1;
}
