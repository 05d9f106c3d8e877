#pragma once

#include <string>

#include "ncard/exact_count.hpp"
#include "ncard/hand_counters.hpp"

namespace ncard {

inline constexpr int kDefaultSignificantDigits = 12;

// Exact rational in lowest terms, 0 <= value <= 1.
class ExactProbability {
 public:
  // Throws std::domain_error when numerator > denominator or denominator is 0.
  ExactProbability(ExactCount numerator, ExactCount denominator);

  ExactCount numerator() const { return num_; }
  ExactCount denominator() const { return den_; }

  // "num/den" in lowest terms.
  std::string fraction() const;
  // Fixed-point decimal with exactly `significant_digits` significant digits,
  // rounded half-to-even on the exact value. Zero renders as "0".
  std::string decimal(int significant_digits = kDefaultSignificantDigits) const;
  double to_double() const { return num_.to_double() / den_.to_double(); }

  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;

 private:
  ExactCount num_;
  ExactCount den_;
};

// count / C(52, n); rejects count > C(52, n).
ExactProbability probability(ExactCount count, HandSize n);

}  // namespace ncard
