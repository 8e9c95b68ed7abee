#include "tauenum/dyadic.hpp"

#include <algorithm>
#include <bit>

namespace tauenum {

DyadicRational::DyadicRational(std::uint64_t numerator, unsigned exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const unsigned shift =
      std::min<unsigned>(exponent_, std::countr_zero(numerator_));
  numerator_ >>= shift;
  exponent_ -= shift;
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const unsigned e = std::max(a.exponent_, b.exponent_);
  const Count lhs = checked_shl(a.numerator_, e - a.exponent_);
  const Count rhs = checked_shl(b.numerator_, e - b.exponent_);
  return {checked_add(lhs, rhs), e};
}

std::strong_ordering operator<=>(const DyadicRational& a,
                                 const DyadicRational& b) {
  const unsigned e = std::max(a.exponent_, b.exponent_);
  const unsigned __int128 lhs =
      static_cast<unsigned __int128>(a.numerator_) << (e - a.exponent_);
  const unsigned __int128 rhs =
      static_cast<unsigned __int128>(b.numerator_) << (e - b.exponent_);
  return lhs <=> rhs;
}

std::string DyadicRational::to_string() const {
  if (exponent_ == 0) return std::to_string(numerator_);
  return std::to_string(numerator_) + "/" + std::to_string(denominator());
}

}  // namespace tauenum
