#pragma once

#include <string>
#include <vector>

#include "ncard/straight_ranks.hpp"

namespace ncard {

enum class VerifyMode { kFast, kSlow };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kFast;
  // Table under test for the straight checks; tests substitute a tampered one.
  GTable g_table = kGTableValues;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::kFast;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<CheckResult> failures() const;
  // Stable JSON document: mode, overall result, one object per check.
  std::string to_json() const;
};

// Runs the cross-module checks: g table against brute force, closed forms
// against exhaustive enumeration (n <= 6, or n <= 7 in slow mode), the
// certainty thresholds, flush/full-house dominance, monotone probabilities
// and the two crossover points.
VerificationReport verify(const VerifyOptions& options = {});

}  // namespace ncard
