#include "ncard/combinatorics.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "support/gf_oracle.hpp"

namespace ncard {
namespace {

using testing::choose_mult;

TEST(Binomial, TableValues) {
  EXPECT_EQ(binomial(52, 5), ExactCount(2598960));
  EXPECT_EQ(binomial(52, 0), ExactCount(1));
  EXPECT_EQ(binomial(52, 26), ExactCount(495918532948104ULL));
  EXPECT_EQ(binomial(0, 0), ExactCount(1));
}

TEST(Binomial, OutOfRangeKIsZero) {
  EXPECT_EQ(binomial(52, -1), ExactCount(0));
  EXPECT_EQ(binomial(52, 53), ExactCount(0));
  EXPECT_EQ(binomial(4, 5), ExactCount(0));
}

TEST(Binomial, RejectsNOutsideDeck) {
  EXPECT_THROW(binomial(53, 1), std::out_of_range);
  EXPECT_THROW(binomial(-1, 0), std::out_of_range);
}

TEST(Binomial, SymmetryPascalAndMultiplicativeFormula) {
  for (int n = 0; n <= 52; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n, n - k)) << n << ' ' << k;
      EXPECT_EQ(binomial(n, k).raw(), choose_mult(n, k)) << n << ' ' << k;
      if (n >= 1) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << ' ' << k;
    }
  }
}

TEST(BoundedPartition, CanonicalFormDropsZerosAndSortsDescending) {
  const BoundedPartition p({0, 2, 3, 2}, PartitionBounds{7, 4, 13});
  EXPECT_EQ(std::vector<int>(p.parts().begin(), p.parts().end()), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.sum(), 7);
  EXPECT_EQ(p.largest(), 3);
  EXPECT_EQ(p.second_largest(), 2);
}

TEST(BoundedPartition, RejectsBoundViolations) {
  EXPECT_THROW(BoundedPartition({5, 1}, PartitionBounds{6, 4, 4}), std::invalid_argument);
  EXPECT_THROW(BoundedPartition({1, 1, 1, 1, 1}, PartitionBounds{5, 4, 13}), std::invalid_argument);
  EXPECT_THROW(BoundedPartition({3, 2}, PartitionBounds{6, 4, 13}), std::invalid_argument);
  EXPECT_THROW(BoundedPartition({-1, 2}), std::invalid_argument);
}

TEST(Nu, Examples) {
  EXPECT_EQ(nu(BoundedPartition{2, 2, 3}), ExactCount(3));
  EXPECT_EQ(nu(BoundedPartition{5}), ExactCount(1));
  EXPECT_EQ(nu(BoundedPartition{1, 2, 3, 4}), ExactCount(24));
  EXPECT_EQ(nu(BoundedPartition{}), ExactCount(1));
  EXPECT_EQ(nu(BoundedPartition{0, 0, 2, 2}), ExactCount(1));
}

TEST(EnumeratePartitions, SmallCaseInOrder) {
  const auto parts = enumerate_partitions(5, 13, 4);
  const std::vector<std::vector<int>> expected = {{4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  ASSERT_EQ(parts.size(), expected.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    EXPECT_EQ(std::vector<int>(parts[i].parts().begin(), parts[i].parts().end()), expected[i]);
  }
}

TEST(EnumeratePartitions, Counts) {
  EXPECT_EQ(enumerate_partitions(26, 13, 4).size(), 104u);
  EXPECT_EQ(enumerate_partitions(53, 13, 4).size(), 0u);
  EXPECT_EQ(enumerate_partitions(0, 4, 13).size(), 1u);
  EXPECT_EQ(enumerate_partitions(52, 4, 13).size(), 1u);
  EXPECT_THROW(enumerate_partitions(-1, 4, 13), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(5, 0, 13), std::invalid_argument);
}

// Independent count: memoized recurrence over (remaining sum, parts left, value cap).
std::uint64_t reference_count(int sum, int parts, int cap, std::map<std::tuple<int, int, int>, std::uint64_t>& memo) {
  if (sum == 0) return 1;
  if (parts == 0 || cap == 0) return 0;
  const auto key = std::make_tuple(sum, parts, cap);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Either no part equals cap, or one part equals cap.
  std::uint64_t total = reference_count(sum, parts, cap - 1, memo);
  if (sum >= cap) total += reference_count(sum - cap, parts - 1, cap, memo);
  memo[key] = total;
  return total;
}

TEST(EnumeratePartitions, MatchesRecurrenceAndInvariants) {
  std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  const std::vector<std::pair<int, int>> shapes = {{4, 13}, {13, 4}, {3, 5}, {7, 2}, {1, 52}, {52, 1}};
  for (const auto& [max_parts, max_value] : shapes) {
    for (int s = 0; s <= 52; ++s) {
      std::set<std::vector<int>> seen;
      for_each_partition({s, max_parts, max_value}, [&](const BoundedPartition& p) {
        std::vector<int> v(p.parts().begin(), p.parts().end());
        EXPECT_TRUE(seen.insert(v).second) << "duplicate partition";
        int sum = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          EXPECT_GE(v[i], 1);
          EXPECT_LE(v[i], max_value);
          if (i > 0) EXPECT_LE(v[i], v[i - 1]);
          sum += v[i];
        }
        EXPECT_EQ(sum, s);
        EXPECT_LE(p.size(), max_parts);
      });
      EXPECT_EQ(seen.size(), reference_count(s, max_parts, max_value, memo))
          << "s=" << s << " parts=" << max_parts << " cap=" << max_value;
    }
  }
}

TEST(Nu, TimesMultiplicityFactorialsIsFactorial) {
  const auto factorial = [](int m) {
    u128 f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<u128>(i);
    return f;
  };
  for (const auto& [max_parts, max_value] : std::vector<std::pair<int, int>>{{4, 13}, {13, 4}}) {
    for (int s = 0; s <= 52; ++s) {
      for_each_partition({s, max_parts, max_value}, [&](const BoundedPartition& p) {
        std::map<int, int> mult;
        for (int v : p.parts()) ++mult[v];
        u128 product = nu(p).raw();
        for (const auto& [v, m] : mult) product *= factorial(m);
        EXPECT_TRUE(product == factorial(p.size()));
      });
    }
  }
}

TEST(ExactCount, ArithmeticIsCheckedAndExact) {
  const ExactCount big = binomial(52, 26);
  EXPECT_EQ((big * big).to_string(), "245935191321399712625557194816");
  EXPECT_THROW(ExactCount(1) - ExactCount(2), std::domain_error);
  EXPECT_THROW(ExactCount::from_raw(~u128{0}) + ExactCount(1), std::overflow_error);
  EXPECT_THROW((big * big * big * big), std::overflow_error);
  EXPECT_EQ(ExactCount::parse("495918532948104"), big);
  EXPECT_THROW(ExactCount::parse("12a"), std::invalid_argument);
  EXPECT_THROW(ExactCount::parse(""), std::invalid_argument);
  EXPECT_EQ(gcd(ExactCount(10240), ExactCount(2598960)), ExactCount(80));
}

}  // namespace
}  // namespace ncard
