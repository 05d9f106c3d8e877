#include "ncard/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncard {
namespace {

using PascalRow = std::array<u128, kDeckSize + 1>;

constexpr std::array<PascalRow, kDeckSize + 1> make_pascal() {
  std::array<PascalRow, kDeckSize + 1> t{};
  for (int n = 0; n <= kDeckSize; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

constexpr auto kPascal = make_pascal();

void check_bounds(const PartitionBounds& b) {
  if (b.target_sum < 0 || b.max_parts < 1 || b.max_value < 1) {
    throw std::invalid_argument("partition bounds need target_sum >= 0, max_parts >= 1, max_value >= 1");
  }
}

}  // namespace

ExactCount binomial(int n, int k) {
  if (n < 0 || n > kDeckSize) {
    throw std::out_of_range("binomial: n must be in [0, 52], got " + std::to_string(n));
  }
  if (k < 0 || k > n) return ExactCount{};
  return ExactCount::from_raw(kPascal[n][k]);
}

BoundedPartition::BoundedPartition(std::vector<int> parts, PartitionBounds bounds)
    : bounds_(bounds) {
  check_bounds(bounds);
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (!parts.empty() && parts.back() < 0) {
    throw std::invalid_argument("partition parts must be nonnegative");
  }
  if (static_cast<int>(parts.size()) > bounds.max_parts) {
    throw std::invalid_argument("partition has more than max_parts nonzero parts");
  }
  if (!parts.empty() && parts.front() > bounds.max_value) {
    throw std::invalid_argument("partition part exceeds max_value");
  }
  if (std::accumulate(parts.begin(), parts.end(), 0) != bounds.target_sum) {
    throw std::invalid_argument("partition parts do not sum to target_sum");
  }
  parts_ = std::move(parts);
}

BoundedPartition::BoundedPartition(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (!parts.empty() && parts.back() < 0) {
    throw std::invalid_argument("partition parts must be nonnegative");
  }
  bounds_.target_sum = std::accumulate(parts.begin(), parts.end(), 0);
  bounds_.max_parts = std::max(1, static_cast<int>(parts.size()));
  bounds_.max_value = parts.empty() ? 1 : parts.front();
  parts_ = std::move(parts);
}

ExactCount nu(const BoundedPartition& p) {
  // Multinomial as a product of binomials: choose slots for each run of
  // equal parts in turn.
  const auto parts = p.parts();
  if (parts.size() > static_cast<std::size_t>(kDeckSize)) {
    throw std::out_of_range("nu: more than 52 parts");
  }
  ExactCount result(1);
  int remaining = static_cast<int>(parts.size());
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int run = static_cast<int>(j - i);
    result *= binomial(remaining, run);
    remaining -= run;
    i = j;
  }
  return result;
}

void for_each_partition(PartitionBounds bounds,
                        const std::function<void(const BoundedPartition&)>& visit) {
  check_bounds(bounds);
  if (bounds.target_sum > bounds.max_parts * bounds.max_value) return;

  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(std::min(bounds.max_parts, std::max(bounds.target_sum, 1))));

  // remaining: sum still to place; cap: largest allowed next part.
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      visit(BoundedPartition(BoundedPartition::Trusted{}, stack, bounds));
      return;
    }
    const int slots = bounds.max_parts - static_cast<int>(stack.size());
    if (slots == 0 || remaining > slots * cap) return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      // The remaining slots must be able to absorb what is left.
      if (remaining - part > (slots - 1) * part) break;
      stack.push_back(part);
      self(self, remaining - part, part);
      stack.pop_back();
    }
  };
  recurse(recurse, bounds.target_sum, bounds.max_value);
}

std::vector<BoundedPartition> enumerate_partitions(int target_sum, int max_parts, int max_value) {
  std::vector<BoundedPartition> out;
  for_each_partition({target_sum, max_parts, max_value},
                     [&](const BoundedPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace ncard
