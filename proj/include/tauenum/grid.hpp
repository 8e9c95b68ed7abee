#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tauenum/tau.hpp"

namespace tauenum {

/// Branner-Hubbard tableau of finite size N: entries M(j, k) for j + k <= N.
/// j is depth (rows, downward), k is time (columns, rightward).
class MarkedGrid {
 public:
  MarkedGrid() = default;
  /// All-zero triangle of size N.
  explicit MarkedGrid(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  bool contains(std::size_t j, std::size_t k) const noexcept {
    return j + k <= size_;
  }
  bool at(std::size_t j, std::size_t k) const;
  void set(std::size_t j, std::size_t k, bool value);

  // Unchecked; caller guarantees j + k <= N.
  bool get(std::size_t j, std::size_t k) const noexcept {
    return bits_[offset(j) + k];
  }

  friend bool operator==(const MarkedGrid&, const MarkedGrid&) = default;

 private:
  std::size_t offset(std::size_t j) const noexcept {
    return j * (size_ + 1) - j * (j - 1) / 2;
  }

  std::size_t size_ = 0;
  std::vector<bool> bits_;
};

enum class GridRule { kM0, kM1, kM2, kM3, kM4 };

const char* rule_name(GridRule rule);

struct GridViolation {
  GridRule rule;
  std::size_t j;
  std::size_t k;
  /// l for M1, i for M2, m for M3; empty otherwise.
  std::optional<std::size_t> aux;

  friend bool operator==(const GridViolation&, const GridViolation&) = default;
};

/// Every violation of rules M0-M4 over the whole triangle.
std::vector<GridViolation> validate_grid(const MarkedGrid& grid);

/// Same rules as validate_grid(), stopping at the first violation.
bool is_valid_grid(const MarkedGrid& grid);

/// True iff M0-M3 hold; used to exhibit grids that only M4 rejects.
bool satisfies_m0_to_m3(const MarkedGrid& grid);

MarkedGrid tau_to_grid(const TauFunction& tau);

/// tau(n) = max{ j < n : M(j, n - j) = 1 }. Throws std::invalid_argument
/// listing the violated rules when the grid is not valid.
TauFunction grid_to_tau(const MarkedGrid& grid);

/// N + 1 lines; line j holds M(j,0) ... M(j,N-j) as '0'/'1', each ending
/// in '\n'.
std::string format_grid(const MarkedGrid& grid);
MarkedGrid parse_grid(std::string_view text);

}  // namespace tauenum
