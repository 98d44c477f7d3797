// Runs the verification suite twice: criteria 1..10 from the first run,
// criterion 11 from runtime and byte equality of the two verdicts.

#include <chrono>
#include <cstdio>

#include "tmrat/verify.hpp"

int main() {
  using namespace tmrat;
  const VerifyOptions options;

  const auto start = std::chrono::steady_clock::now();
  const auto first = run_verification(options, [](const CheckResult& r) {
    std::printf("%s\n", summary_line(r).c_str());
    std::fflush(stdout);
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto second = run_verification(options);
  const bool identical = verdict_json(first, options).dump() == verdict_json(second, options).dump();
  const bool fast = seconds < 180;
  const bool pass11 = identical && fast && all_pass(first);
  std::printf("%s  11 %-20s %.2fs < 180s, verdicts %s\n", pass11 ? "PASS" : "FAIL", "verify_end_to_end", seconds,
              identical ? "byte-identical" : "DIFFER");

  const bool ok = all_pass(first) && pass11;
  std::printf("%s\n", ok ? "acceptance: all criteria pass" : "acceptance: FAILED");
  return ok ? 0 : 1;
}
