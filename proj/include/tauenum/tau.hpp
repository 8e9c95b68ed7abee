#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tauenum {

using Level = std::size_t;

/// A tau-function tau(1..N), stored with its orbit orders.
///
/// Construction enforces tau(1) = 0 and tau(n) <= n - 1, which is enough for
/// every orbit to reach 0. Admissibility (properties A-E) is a separate check,
/// see check_admissible().
class TauFunction {
 public:
  TauFunction() = default;
  explicit TauFunction(std::span<const Level> values);
  TauFunction(std::initializer_list<Level> values);

  /// Length N.
  std::size_t size() const noexcept { return values_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }

  /// tau(n) for 1 <= n <= N. tau(0) is 0 by convention.
  Level operator()(Level n) const { return values_.at(n); }
  Level operator[](Level n) const noexcept { return values_[n]; }

  /// Number of tau-iterations taking n to 0; ord(0) = 0.
  std::size_t ord(Level n) const;
  std::size_t ord_unchecked(Level n) const noexcept { return ords_[n]; }

  /// tau^m(n).
  Level iterate(Level n, std::size_t m) const;

  /// Appends tau(N+1) = value; requires value <= N.
  void push_back(Level value);
  void pop_back();

  /// Values tau(1), ..., tau(N).
  std::span<const Level> values() const noexcept {
    return std::span<const Level>(values_).subspan(1);
  }

  /// Restriction to 1..length.
  TauFunction prefix(std::size_t length) const;

  friend bool operator==(const TauFunction& a, const TauFunction& b) {
    return a.values_ == b.values_;
  }
  friend auto operator<=>(const TauFunction& a, const TauFunction& b) {
    return a.values_ <=> b.values_;
  }

 private:
  // Index 0 holds the tau(0) = 0 / ord(0) = 0 sentinel.
  std::vector<Level> values_{0};
  std::vector<std::size_t> ords_{0};
};

/// The chain start, tau(start), tau^2(start), ..., 0.
struct OrbitView {
  Level start = 0;
  std::vector<Level> chain;
};

OrbitView orbit(const TauFunction& tau, Level start);

std::size_t ord(const TauFunction& tau, Level n);

enum class Property { kNone, kRange, kA, kB, kC, kD, kE };

const char* property_name(Property p);

struct AdmissibilityReport {
  bool admissible = true;
  Property violated = Property::kNone;
  /// 1-based index n at which the violation was detected (n for C/D/E means
  /// the constraint on tau(n+1)).
  std::size_t index = 0;

  explicit operator bool() const noexcept { return admissible; }
};

/// Checks properties A-E on an arbitrary candidate sequence. Reports the
/// first violation in property order (range, A, B, C, D, E), n ascending.
AdmissibilityReport check_admissible(std::span<const std::int64_t> candidate);
AdmissibilityReport check_admissible(const TauFunction& tau);

inline bool is_admissible(const TauFunction& tau) {
  return check_admissible(tau).admissible;
}

/// {m in 1..N-1 : tau(m+1) < tau(m) + 1}, ascending.
std::vector<Level> markers(const TauFunction& tau);

/// Levels in the strict forward orbits of the markers, plus 0; ascending.
std::vector<Level> marked_levels(const TauFunction& tau);

/// Same set as marked_levels() as a membership table indexed 0..N.
std::vector<bool> marked_level_table(const TauFunction& tau);

/// Parses "0,1,0,1,0". Whitespace around tokens is ignored. Throws
/// std::invalid_argument on anything that is not a signed decimal integer.
std::vector<std::int64_t> parse_tau_text(std::string_view text);

/// Parses and builds a TauFunction; throws std::invalid_argument when the
/// sequence violates tau(1) = 0 or 0 <= tau(n) <= n - 1.
TauFunction parse_tau(std::string_view text);

std::string format_tau(const TauFunction& tau);

}  // namespace tauenum
