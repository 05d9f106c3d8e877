#include "ncard/verify.hpp"

#include <algorithm>

#include <json.hpp>

#include "gtest/gtest.h"

namespace ncard {
namespace {

const CheckResult* find(const VerificationReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(Verify, FastModePassesAndIsDeterministic) {
  const VerificationReport first = verify();
  for (const CheckResult& c : first.failures()) ADD_FAILURE() << c.name << ": " << c.expected << " vs " << c.actual;
  EXPECT_TRUE(first.passed());
  EXPECT_EQ(find(first, "oracle_straight_n7"), nullptr);
  ASSERT_NE(find(first, "oracle_full_house_n6"), nullptr);

  const VerificationReport second = verify();
  EXPECT_EQ(first.to_json(), second.to_json());

  const auto doc = nlohmann::json::parse(first.to_json());
  EXPECT_EQ(doc["mode"], "fast");
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["checks"].size(), first.checks.size());
}

TEST(Verify, SlowModeAddsSevenCardEnumeration) {
  VerifyOptions options;
  options.mode = VerifyMode::kSlow;
  const VerificationReport report = verify(options);
  EXPECT_TRUE(report.passed());
  const CheckResult* straight7 = find(report, "oracle_straight_n7");
  ASSERT_NE(straight7, nullptr);
  EXPECT_EQ(straight7->expected, "6454272");
  EXPECT_EQ(straight7->actual, "6454272");
}

TEST(Verify, TamperedGTableFails) {
  VerifyOptions options;
  options.g_table[9] = ExactCount(385);  // before removing the double-counted case
  const VerificationReport report = verify(options);
  EXPECT_FALSE(report.passed());
  const auto failures = report.failures();
  const auto failed = [&](const std::string& name) {
    return std::any_of(failures.begin(), failures.end(), [&](const CheckResult& c) { return c.name == name; });
  };
  EXPECT_TRUE(failed("g_table_matches_bruteforce"));
  EXPECT_TRUE(failed("g_table_sum_matches_subset_count"));
  EXPECT_FALSE(failed("oracle_flush_n5"));
  const auto doc = nlohmann::json::parse(report.to_json());
  EXPECT_EQ(doc["passed"], false);
}

}  // namespace
}  // namespace ncard
