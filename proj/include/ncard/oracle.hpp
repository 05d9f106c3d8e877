#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "ncard/card_set.hpp"
#include "ncard/exact_count.hpp"
#include "ncard/hand_counters.hpp"
#include "ncard/probability.hpp"

namespace ncard {

// Direct predicates on a card set. Each is monotone under card insertion.
bool contains_flush(CardSet hand);
// Per-rank count multiset has largest >= 3 and second-largest >= 2. Four of
// a kind plus a single kicker does not qualify.
bool contains_full_house(CardSet hand);
bool contains_straight(CardSet hand);

using HandPredicate = Category;
bool holds(HandPredicate predicate, CardSet hand);

// Hit counts for all three predicates over one enumeration pass.
struct EnumerationCounts {
  std::uint64_t hands = 0;
  std::uint64_t straight = 0;
  std::uint64_t flush = 0;
  std::uint64_t full_house = 0;

  std::uint64_t of(Category c) const;
  friend bool operator==(const EnumerationCounts&, const EnumerationCounts&) = default;
};

// Calls visit once per n-card subset of `deck`, in lexicographic card-index order.
void for_each_hand(CardSet deck, int n, const std::function<void(CardSet)>& visit);

// Reference enumeration: for_each_hand plus the direct predicates, one
// thread, no incremental state.
EnumerationCounts enumerate_counts_serial(CardSet deck, int n);

// Fast enumeration: incremental per-suit/per-rank counters, fanned out over
// OpenMP threads by first card. Identical results for any thread count.
EnumerationCounts enumerate_counts(CardSet deck, int n);

struct EnumerationOptions {
  int max_hand_size = 7;
  CardSet deck = CardSet::full_deck();
};

// Exact number of n-card hands satisfying the predicate. Throws
// std::invalid_argument when n exceeds options.max_hand_size.
ExactCount exhaustive_count(HandSize n, HandPredicate predicate, const EnumerationOptions& options = {});

inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64-substreams+lemire-bounded";

// Seeds for worker substreams, derived from the master seed with splitmix64.
std::uint64_t substream_seed(std::uint64_t master_seed, unsigned worker);

// Uniform n-card hands by partial Fisher-Yates over a 52-card array.
class HandSampler {
 public:
  explicit HandSampler(std::uint64_t seed);
  CardSet draw(int n);

 private:
  std::uint64_t bounded(std::uint64_t range);

  std::mt19937_64 rng_;
  std::array<int, kDeckSize> deck_{};
};

struct SampleEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  ExactProbability point() const { return ExactProbability(ExactCount(hits), ExactCount(samples)); }
  double point_value() const { return static_cast<double>(hits) / static_cast<double>(samples); }
  // sqrt(p (1 - p) / samples) with p = hits / samples.
  double standard_error() const;
  friend bool operator==(const SampleEstimate&, const SampleEstimate&) = default;
};

// Worker w draws its share of the samples from substream_seed(seed, w), so
// the result depends on (n, predicate, samples, seed, workers) only.
// Throws std::invalid_argument when samples or workers is 0.
SampleEstimate monte_carlo(HandSize n, HandPredicate predicate, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers = 1);

}  // namespace ncard
