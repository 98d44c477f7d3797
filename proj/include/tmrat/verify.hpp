#pragma once

// The acceptance checks, numbered 1..10. Each check collects a few
// measurements (value against bound); it passes when all of them do and it
// finished inside its time budget.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tmrat/serialize.hpp"
#include "tmrat/types.hpp"

namespace tmrat {

struct Measurement {
  std::string label;
  Real value = 0;
  Real bound = 0;
  // Bounds that --tolerance replaces. Counts and hard limits are not tolerances.
  bool tolerance = true;
  bool pass = false;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  std::vector<Measurement> parts;
  // Reported but never gating.
  std::vector<Measurement> diagnostics;
  double seconds = 0;
  double budget_seconds = 0;

  bool numeric_pass() const;
  bool within_budget() const { return budget_seconds <= 0 || seconds <= budget_seconds; }
  bool pass() const { return numeric_pass() && within_budget(); }
  // The part with the largest value/bound ratio.
  const Measurement& worst() const;
};

struct VerifyOptions {
  // Check name or criterion number; empty runs everything.
  std::vector<std::string> only;
  std::optional<Real> tolerance;
  std::uint64_t seed = 20240601;
};

// Names in criterion order.
const std::vector<std::string>& check_names();

// Throws InvalidArgument for an unknown name in options.only.
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_done = {});

bool all_pass(const std::vector<CheckResult>& results);

// {"seed", "pass", "checks": {name: {criterion, pass, value, bound, parts}}, "diagnostics"}.
// Contains no timing, so it is identical across runs with the same options.
Json verdict_json(const std::vector<CheckResult>& results, const VerifyOptions& options);
// {name: {seconds, budget, within_budget}}.
Json timings_json(const std::vector<CheckResult>& results);

// One line per check: PASS/FAIL, criterion, name, worst value against bound, time.
std::string summary_line(const CheckResult& result);

}  // namespace tmrat
