#include "ncard/straight_ranks.hpp"

#include <stdexcept>
#include <string>

namespace ncard {

RankSet RankSet::of(std::initializer_list<int> ranks) {
  RankSet s;
  for (int r : ranks) {
    if (r < 1 || r > kRanks) throw std::out_of_range("rank must be in [1, 13]");
    s = s.with(r);
  }
  return s;
}

GTable g_bruteforce_table() {
  GTable table{};
  for (unsigned bits = 0; bits <= RankSet::kAllRanks; ++bits) {
    const RankSet s = RankSet::from_bits(static_cast<std::uint16_t>(bits));
    if (contains_straight_ranks(s)) table[static_cast<std::size_t>(s.size())] += ExactCount(1);
  }
  return table;
}

ExactCount g_bruteforce(int k) {
  if (k < 0 || k > kRanks) throw std::out_of_range("g: k must be in [0, 13]");
  return g_bruteforce_table()[static_cast<std::size_t>(k)];
}

std::vector<GTableMismatch> check_g_table(const GTable& table) {
  const GTable reference = g_bruteforce_table();
  std::vector<GTableMismatch> out;
  for (int k = 0; k < kGTableSize; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (reference[i] != table[i]) out.push_back({k, reference[i], table[i]});
  }
  return out;
}

ExactCount g(int k) {
  static const bool table_ok = check_g_table(kGTableValues).empty();
  if (!table_ok) throw std::logic_error("hardcoded g table disagrees with brute force");
  if (k < 0 || k > kRanks) throw std::out_of_range("g: k must be in [0, 13], got " + std::to_string(k));
  return kGTableValues[static_cast<std::size_t>(k)];
}

}  // namespace ncard
