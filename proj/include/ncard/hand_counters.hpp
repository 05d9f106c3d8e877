#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ncard/combinatorics.hpp"
#include "ncard/exact_count.hpp"
#include "ncard/straight_ranks.hpp"

namespace ncard {

// Hand categories, in containment sense: a hand counts as a flush when it
// contains five cards of one suit, whatever else it holds.
enum class Category { kStraight, kFlush, kFullHouse };

inline constexpr std::array<Category, 3> kAllCategories = {Category::kStraight, Category::kFlush,
                                                           Category::kFullHouse};

std::string_view to_string(Category c);
// Accepts "straight", "flush", "full_house" / "full-house" / "fullhouse".
std::optional<Category> parse_category(std::string_view text);

// Number of cards in a hand, 0..52.
class HandSize {
 public:
  // Throws std::out_of_range outside [0, 52].
  explicit HandSize(int n);
  constexpr int value() const { return n_; }
  friend constexpr bool operator==(HandSize, HandSize) = default;

 private:
  int n_;
};

// Suit split: up to 4 parts of at most 13 (cards per suit).
inline constexpr int kSuitSplitParts = 4;
inline constexpr int kSuitSplitMax = 13;
// Rank split: up to 13 parts of at most 4 (cards per rank).
inline constexpr int kRankSplitParts = 13;
inline constexpr int kRankSplitMax = 4;

ExactCount total_hands(HandSize n);

// Hands whose suit counts realize S: C(4, |S|) * nu(S) * prod C(13, r_i).
ExactCount flush_complement_term(const BoundedPartition& suit_split);
// Hands whose rank counts realize T: C(13, |T|) * nu(T) * prod C(4, t_i).
ExactCount rank_split_term(const BoundedPartition& rank_split);

ExactCount count_flush(HandSize n);
ExactCount count_full_house(HandSize n);
ExactCount count_straight(HandSize n);
// Straight count with an explicit g table (used by verification fixtures).
ExactCount count_straight(HandSize n, const GTable& g_table);

ExactCount count(Category c, HandSize n);

}  // namespace ncard
