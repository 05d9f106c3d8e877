#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "ncard/exact_count.hpp"

namespace ncard {

inline constexpr int kDeckSize = 52;

// C(n, k) for 0 <= n <= 52, served from a precomputed Pascal triangle.
// Out-of-range k gives 0; n outside [0, 52] throws std::out_of_range.
ExactCount binomial(int n, int k);

struct PartitionBounds {
  int target_sum = 0;
  int max_parts = 1;
  int max_value = 1;

  friend bool operator==(const PartitionBounds&, const PartitionBounds&) = default;
};

// A multiset of positive parts, stored sorted descending. Zero parts are
// dropped on construction, so size() is the count of nonzero elements.
class BoundedPartition {
 public:
  // Validates against `bounds`; throws std::invalid_argument on violation.
  BoundedPartition(std::vector<int> parts, PartitionBounds bounds);
  BoundedPartition(std::initializer_list<int> parts, PartitionBounds bounds)
      : BoundedPartition(std::vector<int>(parts), bounds) {}
  // Unbounded convenience: bounds are inferred from the parts themselves.
  explicit BoundedPartition(std::vector<int> parts);
  BoundedPartition(std::initializer_list<int> parts)
      : BoundedPartition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const PartitionBounds& bounds() const { return bounds_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int sum() const { return bounds_.target_sum; }
  // Largest part, or 0 for the empty partition.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  // Second-largest part (counted with multiplicity), or 0.
  int second_largest() const { return parts_.size() < 2 ? 0 : parts_[1]; }

  friend bool operator==(const BoundedPartition& a, const BoundedPartition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  struct Trusted {};
  BoundedPartition(Trusted, std::vector<int> parts, PartitionBounds bounds)
      : parts_(std::move(parts)), bounds_(bounds) {}
  friend void for_each_partition(PartitionBounds,
                                 const std::function<void(const BoundedPartition&)>&);

  std::vector<int> parts_;
  PartitionBounds bounds_;
};

// Number of distinct orderings of the parts: |P|! / prod(multiplicity!).
ExactCount nu(const BoundedPartition& p);

// Visits every partition of target_sum into at most max_parts parts each in
// [1, max_value], exactly once. Order: largest first part first, then
// lexicographically descending. Visits nothing when the sum is unreachable.
void for_each_partition(PartitionBounds bounds,
                        const std::function<void(const BoundedPartition&)>& visit);

std::vector<BoundedPartition> enumerate_partitions(int target_sum, int max_parts, int max_value);

}  // namespace ncard
