#include "ncard/hand_counters.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ncard {
namespace {

template <int N>
constexpr std::array<ExactCount, N + 1> binomial_row() {
  std::array<ExactCount, N + 1> row{};
  u128 c = 1;
  for (int k = 0; k <= N; ++k) {
    row[k] = ExactCount::from_raw(c);
    c = c * static_cast<u128>(N - k) / static_cast<u128>(k + 1);
  }
  return row;
}

// C(4, k), C(13, k) and C(52, k), looked up millions of times per table.
constexpr auto kChoose4 = binomial_row<4>();
constexpr auto kChoose13 = binomial_row<13>();
constexpr auto kChoose52 = binomial_row<52>();

ExactCount choose4(int k) { return kChoose4[static_cast<std::size_t>(k)]; }
ExactCount choose13(int k) { return kChoose13[static_cast<std::size_t>(k)]; }

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kStraight: return "straight";
    case Category::kFlush: return "flush";
    case Category::kFullHouse: return "full_house";
  }
  return "unknown";
}

std::optional<Category> parse_category(std::string_view text) {
  if (text == "straight") return Category::kStraight;
  if (text == "flush") return Category::kFlush;
  if (text == "full_house" || text == "full-house" || text == "fullhouse") return Category::kFullHouse;
  return std::nullopt;
}

HandSize::HandSize(int n) : n_(n) {
  if (n < 0 || n > kDeckSize) {
    throw std::out_of_range("hand size must be in [0, 52], got " + std::to_string(n));
  }
}

ExactCount total_hands(HandSize n) { return kChoose52[static_cast<std::size_t>(n.value())]; }

ExactCount flush_complement_term(const BoundedPartition& suit_split) {
  if (suit_split.size() > kSuitSplitParts || suit_split.largest() > kSuitSplitMax) {
    throw std::invalid_argument("suit split needs at most 4 parts of at most 13");
  }
  ExactCount term = choose4(suit_split.size()) * nu(suit_split);
  for (int r : suit_split.parts()) term *= choose13(r);
  return term;
}

ExactCount rank_split_term(const BoundedPartition& rank_split) {
  if (rank_split.size() > kRankSplitParts || rank_split.largest() > kRankSplitMax) {
    throw std::invalid_argument("rank split needs at most 13 parts of at most 4");
  }
  ExactCount term = choose13(rank_split.size()) * nu(rank_split);
  for (int t : rank_split.parts()) term *= choose4(t);
  return term;
}

ExactCount count_flush(HandSize n) {
  ExactCount flush_free;
  for_each_partition({n.value(), kSuitSplitParts, kSuitSplitMax}, [&](const BoundedPartition& s) {
    if (s.largest() <= 4) flush_free += flush_complement_term(s);
  });
  return total_hands(n) - flush_free;
}

ExactCount count_full_house(HandSize n) {
  ExactCount hits;
  for_each_partition({n.value(), kRankSplitParts, kRankSplitMax}, [&](const BoundedPartition& t) {
    if (t.largest() >= 3 && t.second_largest() >= 2) hits += rank_split_term(t);
  });
  return hits;
}

ExactCount count_straight(HandSize n, const GTable& g_table) {
  ExactCount hits;
  for_each_partition({n.value(), kRankSplitParts, kRankSplitMax}, [&](const BoundedPartition& h) {
    // rank_split_term carries C(13, |H|); the straight sum weighs by g(|H|) instead.
    ExactCount term = g_table[static_cast<std::size_t>(h.size())] * nu(h);
    for (int t : h.parts()) term *= choose4(t);
    hits += term;
  });
  return hits;
}

ExactCount count_straight(HandSize n) {
  GTable validated{};
  for (int k = 0; k < kGTableSize; ++k) validated[static_cast<std::size_t>(k)] = g(k);
  return count_straight(n, validated);
}

ExactCount count(Category c, HandSize n) {
  switch (c) {
    case Category::kStraight: return count_straight(n);
    case Category::kFlush: return count_flush(n);
    case Category::kFullHouse: return count_full_house(n);
  }
  throw std::invalid_argument("unknown category");
}

}  // namespace ncard
