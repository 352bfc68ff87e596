// Acceptance gate: runs every check of the verification harness at full
// scale with a fixed seed and prints one line per criterion.  Exits nonzero
// when any check fails, with the failing witness dumped for inspection.
#include <cstdint>
#include <iostream>

#include "finbool/harness.hpp"

int main() {
  constexpr std::uint64_t kSeed = 42;
  std::vector<finbool::CheckResult> results =
      finbool::run_acceptance(kSeed, finbool::Profile::full);
  bool all_pass = true;
  for (const finbool::CheckResult& r : results) {
    const bool pass = r.status == finbool::CheckStatus::pass;
    all_pass = all_pass && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
              << static_cast<long long>(r.ms) << " ms)\n";
    if (!pass) std::cout << "        " << r.details.dump(2) << "\n";
  }
  std::cout << (all_pass ? "acceptance: all checks passed"
                         : "acceptance: FAILURES above")
            << " (seed " << kSeed << ", full profile)\n";
  return all_pass ? 0 : 1;
}
