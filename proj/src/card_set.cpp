#include "ncard/card_set.hpp"

#include <array>
#include <stdexcept>

namespace ncard {

CardSet CardSet::of(std::initializer_list<Card> cards) {
  CardSet s;
  for (const Card& c : cards) {
    if (c.rank < 1 || c.rank > kRanks || c.suit < 1 || c.suit > kSuits) {
      throw std::out_of_range("card needs rank in [1, 13] and suit in [1, 4]");
    }
    s = s.with(card_index(c.rank, c.suit));
  }
  return s;
}

int CardSet::rank_count(int rank) const {
  int count = 0;
  for (int s = 1; s <= kSuits; ++s) count += suit_ranks(s).contains(rank) ? 1 : 0;
  return count;
}

std::string to_string(CardSet hand) {
  static constexpr std::array<const char*, kRanks> kRankNames = {"A", "2", "3",  "4", "5", "6", "7",
                                                                 "8", "9", "10", "J", "Q", "K"};
  static constexpr std::array<const char*, kSuits> kSuitNames = {"♠", "♥", "♦", "♣"};
  std::string out;
  for (int i = 0; i < kDeckSize; ++i) {
    if (!hand.contains(i)) continue;
    const Card c = card_at(i);
    if (!out.empty()) out.push_back(' ');
    out += kRankNames[static_cast<std::size_t>(c.rank - 1)];
    out += kSuitNames[static_cast<std::size_t>(c.suit - 1)];
  }
  return out;
}

}  // namespace ncard
