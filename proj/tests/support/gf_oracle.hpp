#pragma once

// Test-only counting routes that share nothing with the partition sums:
// polynomial products over suits or ranks, with binomials from the
// multiplicative formula. Coefficient n of each polynomial counts n-card hands.

#include <array>
#include <cstdint>
#include <vector>

namespace ncard::testing {

using u128 = unsigned __int128;
using Poly = std::vector<u128>;

inline u128 choose_mult(int n, int k) {
  if (k < 0 || k > n) return 0;
  u128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  return c;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline u128 coeff(const Poly& p, int n) {
  return n >= 0 && static_cast<std::size_t>(n) < p.size() ? p[static_cast<std::size_t>(n)] : 0;
}

// Flush-free hands: every suit holds at most 4 of its 13 cards.
inline u128 gf_flush(int n) {
  Poly suit(5);
  for (int r = 0; r <= 4; ++r) suit[static_cast<std::size_t>(r)] = choose_mult(13, r);
  Poly all{1};
  for (int s = 0; s < 4; ++s) all = poly_mul(all, suit);
  return choose_mult(52, n) - coeff(all, n);
}

// Full house: per-rank scan tracking (some rank has >= 3, ranks with >= 2 capped at 2).
inline u128 gf_full_house(int n) {
  // state index = has3 * 3 + min(ge2, 2)
  std::array<Poly, 6> state;
  for (auto& p : state) p.assign(53, 0);
  state[0][0] = 1;
  for (int rank = 0; rank < 13; ++rank) {
    std::array<Poly, 6> next;
    for (auto& p : next) p.assign(53, 0);
    for (int st = 0; st < 6; ++st) {
      const int has3 = st / 3;
      const int ge2 = st % 3;
      for (int t = 0; t <= 4; ++t) {
        const int nh = has3 | (t >= 3 ? 1 : 0);
        const int ng = ge2 + (t >= 2 ? 1 : 0) > 2 ? 2 : ge2 + (t >= 2 ? 1 : 0);
        const u128 w = choose_mult(4, t);
        for (int c = 0; c + t <= 52; ++c) next[static_cast<std::size_t>(nh * 3 + ng)][static_cast<std::size_t>(c + t)] +=
            state[static_cast<std::size_t>(st)][static_cast<std::size_t>(c)] * w;
      }
    }
    state = next;
  }
  return coeff(state[5], n);
}

// Straight: sum over present-rank sets containing a window of
// (sum_{t=1..4} C(4,t) x^t)^|R|, windows tested as explicit rank runs.
inline bool has_run(unsigned ranks) {
  // ranks bit r-1 for rank r; the Ace (bit 0) also sits above the King.
  const unsigned extended = ranks | ((ranks & 1u) << 13);
  for (int low = 0; low + 4 <= 13; ++low) {
    bool run = true;
    for (int i = 0; i < 5; ++i) run = run && ((extended >> (low + i)) & 1u);
    if (run) return true;
  }
  return false;
}

inline u128 gf_straight(int n) {
  Poly present(5, 0);
  for (int t = 1; t <= 4; ++t) present[static_cast<std::size_t>(t)] = choose_mult(4, t);
  std::array<Poly, 14> powers;
  powers[0] = Poly{1};
  for (int k = 1; k <= 13; ++k) powers[static_cast<std::size_t>(k)] = poly_mul(powers[static_cast<std::size_t>(k - 1)], present);
  std::array<u128, 14> straight_sets{};
  for (unsigned bits = 0; bits < (1u << 13); ++bits) {
    if (has_run(bits)) ++straight_sets[static_cast<std::size_t>(__builtin_popcount(bits))];
  }
  u128 total = 0;
  for (int k = 0; k <= 13; ++k) total += straight_sets[static_cast<std::size_t>(k)] * coeff(powers[static_cast<std::size_t>(k)], n);
  return total;
}

}  // namespace ncard::testing
