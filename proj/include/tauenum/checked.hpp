#pragma once

#include <cstdint>
#include <stdexcept>

namespace tauenum {

/// Exact count. Arithmetic goes through the checked helpers below, which
/// throw instead of wrapping.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("count overflow in addition");
  }
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("count overflow in multiplication");
  }
  return r;
}

inline Count checked_pow2(unsigned exponent) {
  if (exponent >= 64) {
    throw std::overflow_error("count overflow in power of two");
  }
  return Count{1} << exponent;
}

inline Count checked_shl(Count a, unsigned shift) {
  return checked_mul(a, checked_pow2(shift));
}

}  // namespace tauenum
