#include "ncard/probability.hpp"

#include <stdexcept>
#include <vector>

namespace ncard {

ExactProbability::ExactProbability(ExactCount numerator, ExactCount denominator) {
  if (denominator.is_zero()) throw std::domain_error("probability with zero denominator");
  if (numerator > denominator) {
    throw std::domain_error("probability numerator " + numerator.to_string() + " exceeds denominator " +
                            denominator.to_string());
  }
  const ExactCount d = numerator.is_zero() ? denominator : gcd(numerator, denominator);
  num_ = exact_div(numerator, d);
  den_ = exact_div(denominator, d);
}

std::string ExactProbability::fraction() const { return num_.to_string() + "/" + den_.to_string(); }

std::string ExactProbability::decimal(int significant_digits) const {
  if (significant_digits < 1 || significant_digits > 40) {
    throw std::invalid_argument("significant digits must be in [1, 40]");
  }
  if (num_.is_zero()) return "0";

  const u128 den = den_.raw();
  u128 rem = num_.raw();
  // exponent: decimal position of the leading digit (0 = units, -1 = tenths).
  int exponent = 0;
  std::vector<int> digits;
  if (rem >= den) {
    digits.push_back(static_cast<int>(rem / den));
    rem %= den;
  } else {
    do {
      rem *= 10;
      --exponent;
    } while (rem < den);
    digits.push_back(static_cast<int>(rem / den));
    rem %= den;
  }
  while (static_cast<int>(digits.size()) < significant_digits) {
    rem *= 10;
    digits.push_back(static_cast<int>(rem / den));
    rem %= den;
  }

  const u128 twice = rem * 2;
  const bool round_up = twice > den || (twice == den && digits.back() % 2 == 1);
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == 9) digits[static_cast<std::size_t>(i--)] = 0;
    if (i >= 0) {
      ++digits[static_cast<std::size_t>(i)];
    } else {
      digits.insert(digits.begin(), 1);
      digits.pop_back();
      ++exponent;
    }
  }

  std::string out;
  if (exponent >= 0) {
    out.push_back(static_cast<char>('0' + digits[0]));
    if (digits.size() > 1) out.push_back('.');
    for (std::size_t i = 1; i < digits.size(); ++i) out.push_back(static_cast<char>('0' + digits[i]));
  } else {
    out = "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    for (int d : digits) out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

ExactProbability probability(ExactCount count, HandSize n) {
  const ExactCount total = total_hands(n);
  if (count > total) {
    throw std::domain_error("count " + count.to_string() + " exceeds C(52, " + std::to_string(n.value()) +
                            ")");
  }
  return ExactProbability(count, total);
}

}  // namespace ncard
