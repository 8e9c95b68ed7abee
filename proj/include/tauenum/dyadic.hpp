#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "tauenum/checked.hpp"

namespace tauenum {

/// Nonnegative p / 2^q in lowest terms (p odd, or p = 0 and q = 0).
class DyadicRational {
 public:
  constexpr DyadicRational() = default;
  DyadicRational(std::uint64_t numerator, unsigned exponent);

  static DyadicRational from_integer(std::uint64_t value) { return {value, 0}; }
  /// 2^-exponent.
  static DyadicRational inverse_power_of_two(unsigned exponent) {
    return {1, exponent};
  }

  std::uint64_t numerator() const noexcept { return numerator_; }
  unsigned exponent() const noexcept { return exponent_; }
  /// 2^exponent; throws std::overflow_error past 2^63.
  std::uint64_t denominator() const { return checked_pow2(exponent_); }

  bool is_integer() const noexcept { return exponent_ == 0; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  friend DyadicRational operator+(const DyadicRational& a,
                                  const DyadicRational& b);
  DyadicRational& operator+=(const DyadicRational& other) {
    return *this = *this + other;
  }

  friend bool operator==(const DyadicRational&,
                         const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a,
                                          const DyadicRational& b);

  /// "p" or "p/2^q" written out, e.g. "3/4".
  std::string to_string() const;

 private:
  std::uint64_t numerator_ = 0;
  unsigned exponent_ = 0;
};

}  // namespace tauenum
