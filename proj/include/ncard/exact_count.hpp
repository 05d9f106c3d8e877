#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ncard {

using u128 = unsigned __int128;

// Nonnegative exact integer backed by 128 bits. Every operation either
// produces the exact result or throws; nothing wraps silently.
class ExactCount {
 public:
  constexpr ExactCount() = default;
  constexpr ExactCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  static constexpr ExactCount from_raw(u128 v) {
    ExactCount c;
    c.value_ = v;
    return c;
  }

  constexpr u128 raw() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  // Throws std::overflow_error when the value does not fit.
  std::uint64_t to_u64() const;
  double to_double() const { return static_cast<double>(value_); }

  ExactCount& operator+=(ExactCount rhs);
  ExactCount& operator-=(ExactCount rhs);  // throws std::domain_error on a negative result
  ExactCount& operator*=(ExactCount rhs);

  friend ExactCount operator+(ExactCount a, ExactCount b) { return a += b; }
  friend ExactCount operator-(ExactCount a, ExactCount b) { return a -= b; }
  friend ExactCount operator*(ExactCount a, ExactCount b) { return a *= b; }
  // Exact division; throws std::domain_error when b does not divide a.
  friend ExactCount exact_div(ExactCount a, ExactCount b);

  friend constexpr bool operator==(ExactCount a, ExactCount b) = default;
  friend constexpr std::strong_ordering operator<=>(ExactCount a, ExactCount b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;
  // Parses a plain decimal string (digits only). Throws std::invalid_argument.
  static ExactCount parse(std::string_view text);

 private:
  u128 value_ = 0;
};

ExactCount gcd(ExactCount a, ExactCount b);

std::ostream& operator<<(std::ostream& os, ExactCount c);

}  // namespace ncard
