#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tauenum/grid.hpp"

namespace tauenum::testing {

/// Visits every 0/1 triangle of size N whose row 0 and column 0 are all ones
/// (any other triangle already fails M0): 2^(N(N-1)/2) grids.
inline void for_each_m0_grid(std::size_t N,
                             const std::function<void(const MarkedGrid&)>& f) {
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;
  for (std::size_t j = 1; j <= N; ++j) {
    for (std::size_t k = 1; j + k <= N; ++k) free_cells.emplace_back(j, k);
  }
  MarkedGrid grid(N);
  for (std::size_t n = 0; n <= N; ++n) {
    grid.set(n, 0, true);
    grid.set(0, n, true);
  }
  const std::uint64_t total = std::uint64_t{1} << free_cells.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t b = 0; b < free_cells.size(); ++b) {
      grid.set(free_cells[b].first, free_cells[b].second, (mask >> b) & 1);
    }
    f(grid);
  }
}

}  // namespace tauenum::testing
