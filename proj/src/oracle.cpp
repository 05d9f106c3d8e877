#include "ncard/oracle.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncard {
namespace {

const std::array<std::uint8_t, 1u << kRanks>& straight_lookup() {
  static const auto table = [] {
    std::array<std::uint8_t, 1u << kRanks> t{};
    for (unsigned bits = 0; bits < t.size(); ++bits) {
      t[bits] = contains_straight_ranks(RankSet::from_bits(static_cast<std::uint16_t>(bits))) ? 1 : 0;
    }
    return t;
  }();
  return table;
}

std::vector<int> deck_cards(CardSet deck) {
  std::vector<int> cards;
  for (int i = 0; i < kDeckSize; ++i) {
    if (deck.contains(i)) cards.push_back(i);
  }
  return cards;
}

// Running per-suit and per-rank tallies for the current partial hand.
class IncrementalHand {
 public:
  void add(int card) {
    const int suit = card / kRanks;
    const int rank = card % kRanks;
    if (++suit_count_[suit] == 5) ++flush_suits_;
    switch (++rank_count_[rank]) {
      case 1: present_ |= static_cast<std::uint16_t>(1u << rank); break;
      case 2: ++ranks_ge2_; break;
      case 3: ++ranks_ge3_; break;
      default: break;
    }
  }

  void remove(int card) {
    const int suit = card / kRanks;
    const int rank = card % kRanks;
    if (suit_count_[suit]-- == 5) --flush_suits_;
    switch (rank_count_[rank]--) {
      case 1: present_ &= static_cast<std::uint16_t>(~(1u << rank)); break;
      case 2: --ranks_ge2_; break;
      case 3: --ranks_ge3_; break;
      default: break;
    }
  }

  void tally(EnumerationCounts& out, const std::array<std::uint8_t, 1u << kRanks>& lut) const {
    ++out.hands;
    out.straight += lut[present_];
    out.flush += flush_suits_ > 0 ? 1 : 0;
    out.full_house += (ranks_ge3_ >= 1 && ranks_ge2_ >= 2) ? 1 : 0;
  }

 private:
  std::array<int, kSuits> suit_count_{};
  std::array<int, kRanks> rank_count_{};
  std::uint16_t present_ = 0;
  int flush_suits_ = 0;
  int ranks_ge2_ = 0;
  int ranks_ge3_ = 0;
};

void enumerate_from(const std::vector<int>& cards, std::size_t start, int left, IncrementalHand& hand,
                    EnumerationCounts& out, const std::array<std::uint8_t, 1u << kRanks>& lut) {
  if (left == 0) {
    hand.tally(out, lut);
    return;
  }
  const std::size_t stop = cards.size() - static_cast<std::size_t>(left);
  for (std::size_t i = start; i <= stop; ++i) {
    hand.add(cards[i]);
    enumerate_from(cards, i + 1, left - 1, hand, out, lut);
    hand.remove(cards[i]);
  }
}

void check_enumeration_size(CardSet deck, int n) {
  if (n < 0 || n > deck.size()) {
    throw std::invalid_argument("hand size " + std::to_string(n) + " not in [0, " +
                                std::to_string(deck.size()) + "] for this deck");
  }
}

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

bool contains_flush(CardSet hand) {
  for (int s = 1; s <= kSuits; ++s) {
    if (hand.suit_ranks(s).size() >= 5) return true;
  }
  return false;
}

bool contains_full_house(CardSet hand) {
  // Bit-sliced rank counts: bit r of ge2/ge3 is set when rank r appears in
  // at least two/three suits.
  const unsigned a = hand.suit_ranks(1).bits();
  const unsigned b = hand.suit_ranks(2).bits();
  const unsigned c = hand.suit_ranks(3).bits();
  const unsigned d = hand.suit_ranks(4).bits();
  const unsigned ge2 = (a & b) | (a & c) | (a & d) | (b & c) | (b & d) | (c & d);
  const unsigned ge3 = (a & b & c) | (a & b & d) | (a & c & d) | (b & c & d);
  return ge3 != 0 && __builtin_popcount(ge2) >= 2;
}

bool contains_straight(CardSet hand) { return contains_straight_ranks(hand.all_ranks()); }

bool holds(HandPredicate predicate, CardSet hand) {
  switch (predicate) {
    case Category::kStraight: return contains_straight(hand);
    case Category::kFlush: return contains_flush(hand);
    case Category::kFullHouse: return contains_full_house(hand);
  }
  return false;
}

std::uint64_t EnumerationCounts::of(Category c) const {
  switch (c) {
    case Category::kStraight: return straight;
    case Category::kFlush: return flush;
    case Category::kFullHouse: return full_house;
  }
  return 0;
}

void for_each_hand(CardSet deck, int n, const std::function<void(CardSet)>& visit) {
  check_enumeration_size(deck, n);
  const std::vector<int> cards = deck_cards(deck);
  const int m = static_cast<int>(cards.size());
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    CardSet hand;
    for (int p : pos) hand = hand.with(cards[static_cast<std::size_t>(p)]);
    visit(hand);
    // Advance to the next combination of positions.
    int i = n - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

EnumerationCounts enumerate_counts_serial(CardSet deck, int n) {
  EnumerationCounts out;
  for_each_hand(deck, n, [&](CardSet hand) {
    ++out.hands;
    out.straight += contains_straight(hand) ? 1 : 0;
    out.flush += contains_flush(hand) ? 1 : 0;
    out.full_house += contains_full_house(hand) ? 1 : 0;
  });
  return out;
}

EnumerationCounts enumerate_counts(CardSet deck, int n) {
  check_enumeration_size(deck, n);
  const std::vector<int> cards = deck_cards(deck);
  const auto& lut = straight_lookup();
  if (n == 0) {
    EnumerationCounts out;
    IncrementalHand().tally(out, lut);
    return out;
  }

  const long first_cards = static_cast<long>(cards.size()) - n + 1;
  std::uint64_t hands = 0;
  std::uint64_t straight = 0;
  std::uint64_t flush = 0;
  std::uint64_t full_house = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hands, straight, flush, full_house)
  for (long first = 0; first < first_cards; ++first) {
    IncrementalHand hand;
    EnumerationCounts local;
    const auto i = static_cast<std::size_t>(first);
    hand.add(cards[i]);
    enumerate_from(cards, i + 1, n - 1, hand, local, lut);
    hands += local.hands;
    straight += local.straight;
    flush += local.flush;
    full_house += local.full_house;
  }
  return {hands, straight, flush, full_house};
}

ExactCount exhaustive_count(HandSize n, HandPredicate predicate, const EnumerationOptions& options) {
  if (n.value() > options.max_hand_size) {
    throw std::invalid_argument("exhaustive enumeration refused: n = " + std::to_string(n.value()) +
                                " exceeds cap " + std::to_string(options.max_hand_size));
  }
  return ExactCount(enumerate_counts(options.deck, n.value()).of(predicate));
}

std::uint64_t substream_seed(std::uint64_t master_seed, unsigned worker) {
  return splitmix64(master_seed + (static_cast<std::uint64_t>(worker) + 1) * 0x9E3779B97F4A7C15ULL);
}

HandSampler::HandSampler(std::uint64_t seed) : rng_(seed) { std::iota(deck_.begin(), deck_.end(), 0); }

std::uint64_t HandSampler::bounded(std::uint64_t range) {
  // Lemire's multiply-shift with rejection; unbiased and platform-stable.
  u128 m = static_cast<u128>(rng_()) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<u128>(rng_()) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

CardSet HandSampler::draw(int n) {
  if (n < 0 || n > kDeckSize) throw std::invalid_argument("sample size must be in [0, 52]");
  CardSet hand;
  for (int i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i) + bounded(static_cast<std::uint64_t>(kDeckSize - i));
    std::swap(deck_[static_cast<std::size_t>(i)], deck_[j]);
    hand = hand.with(deck_[static_cast<std::size_t>(i)]);
  }
  return hand;
}

double SampleEstimate::standard_error() const {
  const double p = point_value();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

SampleEstimate monte_carlo(HandSize n, HandPredicate predicate, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers) {
  if (samples == 0) throw std::invalid_argument("monte_carlo needs at least one sample");
  if (workers == 0) throw std::invalid_argument("monte_carlo needs at least one worker");

  std::vector<std::uint64_t> hits(workers, 0);
  const std::uint64_t base = samples / workers;
  const std::uint64_t extra = samples % workers;
#pragma omp parallel for schedule(static, 1)
  for (long w = 0; w < static_cast<long>(workers); ++w) {
    const auto worker = static_cast<unsigned>(w);
    const std::uint64_t share = base + (worker < extra ? 1 : 0);
    HandSampler sampler(substream_seed(seed, worker));
    std::uint64_t local = 0;
    for (std::uint64_t i = 0; i < share; ++i) local += holds(predicate, sampler.draw(n.value())) ? 1 : 0;
    hits[worker] = local;
  }
  SampleEstimate est;
  est.hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  est.samples = samples;
  est.seed = seed;
  est.workers = workers;
  return est;
}

}  // namespace ncard
