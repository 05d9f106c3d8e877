#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncard/exact_count.hpp"

namespace ncard {

inline constexpr int kRanks = 13;
inline constexpr int kSuits = 4;

// Subset of ranks 1..13 (1 = Ace, 11 = Jack, 12 = Queen, 13 = King).
// Rank r lives in bit r - 1.
class RankSet {
 public:
  static constexpr std::uint16_t kAllRanks = (1u << kRanks) - 1;

  constexpr RankSet() = default;
  static constexpr RankSet from_bits(std::uint16_t bits) { return RankSet(bits & kAllRanks); }
  static RankSet of(std::initializer_list<int> ranks);

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool contains(int rank) const { return (bits_ >> (rank - 1)) & 1u; }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr RankSet with(int rank) const { return RankSet(bits_ | (1u << (rank - 1))); }
  constexpr bool includes(RankSet other) const { return (bits_ & other.bits_) == other.bits_; }

  friend constexpr bool operator==(RankSet, RankSet) = default;

 private:
  constexpr explicit RankSet(std::uint16_t bits) : bits_(bits) {}
  std::uint16_t bits_ = 0;
};

inline constexpr std::size_t kStraightWindowCount = 10;

// The ten five-rank windows: {i..i+4} for i = 1..9, then {10, J, Q, K, A}.
// The Ace is a single rank; its high role exists only in the last window.
constexpr std::array<RankSet, kStraightWindowCount> straight_windows() {
  std::array<RankSet, kStraightWindowCount> w{};
  for (int low = 1; low <= 9; ++low) {
    w[low - 1] = RankSet::from_bits(static_cast<std::uint16_t>(0x1Fu << (low - 1)));
  }
  w[9] = RankSet::from_bits(static_cast<std::uint16_t>((0xFu << 9) | 1u));
  return w;
}

constexpr bool contains_straight_ranks(RankSet ranks) {
  for (RankSet window : straight_windows()) {
    if (ranks.includes(window)) return true;
  }
  return false;
}

inline constexpr int kGTableSize = kRanks + 1;
using GTable = std::array<ExactCount, kGTableSize>;

// Hardcoded g(k), k = 0..13: number of k-subsets of the 13 ranks containing
// a straight window.
inline constexpr GTable kGTableValues = {0, 0, 0, 0, 0, 10, 71, 217, 371, 384, 234, 77, 13, 1};

// Counts k-subsets containing a straight by scanning all 2^13 rank subsets.
ExactCount g_bruteforce(int k);
GTable g_bruteforce_table();

struct GTableMismatch {
  int k;
  ExactCount expected;  // brute force
  ExactCount actual;    // table under test
};

// Compares a candidate table against brute force; empty on agreement.
std::vector<GTableMismatch> check_g_table(const GTable& table);

// g(k) from the hardcoded table. The table is validated against brute force
// on first use; a disagreement throws std::logic_error on every call.
ExactCount g(int k);

}  // namespace ncard
