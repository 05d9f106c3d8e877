#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

#include "ncard/combinatorics.hpp"
#include "ncard/straight_ranks.hpp"

namespace ncard {

// Suits are numbered 1..4 in the order spades, hearts, diamonds, clubs.
enum Suit : int { kSpades = 1, kHearts = 2, kDiamonds = 3, kClubs = 4 };

struct Card {
  int rank;  // 1..13, Ace = 1
  int suit;  // 1..4
};

// Card index = (suit - 1) * 13 + (rank - 1).
constexpr int card_index(int rank, int suit) { return (suit - 1) * kRanks + (rank - 1); }
constexpr Card card_at(int index) { return {index % kRanks + 1, index / kRanks + 1}; }

// Subset of the 52-card deck as a bit set; suit s occupies bits [(s-1)*13, s*13).
class CardSet {
 public:
  static constexpr std::uint64_t kFullDeck = (std::uint64_t{1} << kDeckSize) - 1;

  constexpr CardSet() = default;
  static constexpr CardSet from_bits(std::uint64_t bits) { return CardSet(bits & kFullDeck); }
  static constexpr CardSet full_deck() { return CardSet(kFullDeck); }
  static CardSet of(std::initializer_list<Card> cards);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return __builtin_popcountll(bits_); }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1u; }
  constexpr CardSet with(int index) const { return CardSet(bits_ | (std::uint64_t{1} << index)); }
  constexpr RankSet suit_ranks(int suit) const {
    return RankSet::from_bits(static_cast<std::uint16_t>(bits_ >> ((suit - 1) * kRanks)));
  }
  constexpr RankSet all_ranks() const {
    return RankSet::from_bits(static_cast<std::uint16_t>(suit_ranks(1).bits() | suit_ranks(2).bits() |
                                                         suit_ranks(3).bits() | suit_ranks(4).bits()));
  }
  int rank_count(int rank) const;

  friend constexpr bool operator==(CardSet, CardSet) = default;

 private:
  constexpr explicit CardSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Human-readable form like "A♠ 10♥ K♣", ordered by card index.
std::string to_string(CardSet hand);

}  // namespace ncard
