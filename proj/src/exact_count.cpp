#include "ncard/exact_count.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ncard {

std::uint64_t ExactCount::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("ExactCount does not fit in 64 bits: " + to_string());
  }
  return static_cast<std::uint64_t>(value_);
}

ExactCount& ExactCount::operator+=(ExactCount rhs) {
  if (__builtin_add_overflow(value_, rhs.value_, &value_)) {
    throw std::overflow_error("ExactCount addition overflow");
  }
  return *this;
}

ExactCount& ExactCount::operator-=(ExactCount rhs) {
  if (rhs.value_ > value_) {
    throw std::domain_error("ExactCount subtraction would be negative");
  }
  value_ -= rhs.value_;
  return *this;
}

ExactCount& ExactCount::operator*=(ExactCount rhs) {
  if (__builtin_mul_overflow(value_, rhs.value_, &value_)) {
    throw std::overflow_error("ExactCount multiplication overflow");
  }
  return *this;
}

ExactCount exact_div(ExactCount a, ExactCount b) {
  if (b.value_ == 0 || a.value_ % b.value_ != 0) {
    throw std::domain_error("ExactCount division is not exact");
  }
  return ExactCount::from_raw(a.value_ / b.value_);
}

std::string ExactCount::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  for (u128 v = value_; v != 0; v /= 10) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ExactCount ExactCount::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer string");
  ExactCount out;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    out *= ExactCount(10);
    out += ExactCount(static_cast<std::uint64_t>(ch - '0'));
  }
  return out;
}

ExactCount gcd(ExactCount a, ExactCount b) {
  u128 x = a.raw();
  u128 y = b.raw();
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return ExactCount::from_raw(x);
}

std::ostream& operator<<(std::ostream& os, ExactCount c) { return os << c.to_string(); }

}  // namespace ncard
