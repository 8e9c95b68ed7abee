#include "tauenum/grid.hpp"

#include <stdexcept>

namespace tauenum {

MarkedGrid::MarkedGrid(std::size_t size)
    : size_(size), bits_((size + 1) * (size + 2) / 2, false) {}

bool MarkedGrid::at(std::size_t j, std::size_t k) const {
  if (!contains(j, k)) throw std::out_of_range("grid cell outside triangle");
  return get(j, k);
}

void MarkedGrid::set(std::size_t j, std::size_t k, bool value) {
  if (!contains(j, k)) throw std::out_of_range("grid cell outside triangle");
  bits_[offset(j) + k] = value;
}

const char* rule_name(GridRule rule) {
  switch (rule) {
    case GridRule::kM0: return "M0";
    case GridRule::kM1: return "M1";
    case GridRule::kM2: return "M2";
    case GridRule::kM3: return "M3";
    case GridRule::kM4: return "M4";
  }
  return "?";
}

namespace {

// Walks every rule instance; `sink` returns false to stop early. Returns
// false iff stopped.
template <typename Sink>
bool check_rules(const MarkedGrid& g, bool include_m4, Sink&& sink) {
  const std::size_t n_max = g.size();
  auto M = [&](std::size_t j, std::size_t k) { return g.get(j, k); };

  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!M(n, 0) && !sink(GridViolation{GridRule::kM0, n, 0, {}})) return false;
    if (n > 0 && !M(0, n) && !sink(GridViolation{GridRule::kM0, 0, n, {}})) {
      return false;
    }
  }

  for (std::size_t j = 0; j <= n_max; ++j) {
    for (std::size_t k = 0; j + k <= n_max; ++k) {
      if (!M(j, k)) continue;
      for (std::size_t l = 0; l < j; ++l) {
        if (!M(l, k) && !sink(GridViolation{GridRule::kM1, j, k, l})) {
          return false;
        }
      }
    }
  }

  for (std::size_t j = 0; j <= n_max; ++j) {
    for (std::size_t k = 0; j + k <= n_max; ++k) {
      if (!M(j, k)) continue;
      for (std::size_t i = 0; i <= j; ++i) {
        if (M(j - i, k + i) != M(j - i, i) &&
            !sink(GridViolation{GridRule::kM2, j, k, i})) {
          return false;
        }
      }
    }
  }

  for (std::size_t j = 0; j + 1 <= n_max; ++j) {
    for (std::size_t k = 0; j + k < n_max; ++k) {
      if (!M(j, k) || M(j + 1, k)) continue;
      // Premise for m: M(j-i, i) = 0 for 0 < i < m and M(j-m+1, m) = 1.
      // The return depth j-m+1 must be positive; row 0 is marked everywhere.
      for (std::size_t m = 1; m <= j; ++m) {
        if (M(j - m + 1, m) && M(j - m + 1, k + m) &&
            !sink(GridViolation{GridRule::kM3, j, k, m})) {
          return false;
        }
        if (M(j - m, m)) break;
      }
    }
  }

  if (!include_m4) return true;
  // M4 as the grid form of "no return to 0": with M(j,k) = 1, M(j+1,k) = 0,
  // M(1,j) = 0 and no marks strictly between depth j and depth 0 on the
  // diagonal j + k, the next diagonal must reach depth 1.
  for (std::size_t j = 0; j + 1 <= n_max; ++j) {
    for (std::size_t k = 0; j + k < n_max; ++k) {
      if (!M(j, k) || M(1, j) || M(j + 1, k)) continue;
      bool gap = true;
      for (std::size_t i = 1; i < j && gap; ++i) gap = !M(j - i, k + i);
      if (gap && !M(1, j + k) &&
          !sink(GridViolation{GridRule::kM4, j, k, {}})) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<GridViolation> validate_grid(const MarkedGrid& grid) {
  std::vector<GridViolation> out;
  check_rules(grid, true, [&](const GridViolation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

bool is_valid_grid(const MarkedGrid& grid) {
  return check_rules(grid, true, [](const GridViolation&) { return false; });
}

bool satisfies_m0_to_m3(const MarkedGrid& grid) {
  return check_rules(grid, false, [](const GridViolation&) { return false; });
}

MarkedGrid tau_to_grid(const TauFunction& tau) {
  const std::size_t n_max = tau.size();
  MarkedGrid grid(n_max);
  grid.set(0, 0, true);
  // Row j is marked at k exactly when j lies on the orbit of j + k.
  for (Level n = 1; n <= n_max; ++n) {
    for (Level j = n;; j = tau[j]) {
      grid.set(j, n - j, true);
      if (j == 0) break;
    }
  }
  return grid;
}

TauFunction grid_to_tau(const MarkedGrid& grid) {
  const auto violations = validate_grid(grid);
  if (!violations.empty()) {
    std::string msg = "invalid marked grid:";
    for (const auto& v : violations) {
      msg += " " + std::string(rule_name(v.rule)) + "(" + std::to_string(v.j) +
             "," + std::to_string(v.k) + ")";
    }
    throw std::invalid_argument(msg);
  }
  TauFunction tau;
  for (std::size_t n = 1; n <= grid.size(); ++n) {
    std::size_t j = n - 1;
    while (!grid.get(j, n - j)) --j;  // M(0, n) = 1 stops the scan
    tau.push_back(j);
  }
  return tau;
}

std::string format_grid(const MarkedGrid& grid) {
  std::string out;
  for (std::size_t j = 0; j <= grid.size(); ++j) {
    for (std::size_t k = 0; j + k <= grid.size(); ++k) {
      out += grid.get(j, k) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

MarkedGrid parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = eol + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw std::invalid_argument("empty grid text");

  const std::size_t n_max = lines.size() - 1;
  MarkedGrid grid(n_max);
  for (std::size_t j = 0; j <= n_max; ++j) {
    if (lines[j].size() != n_max - j + 1) {
      throw std::invalid_argument("grid line " + std::to_string(j) +
                                  " has wrong length");
    }
    for (std::size_t k = 0; k < lines[j].size(); ++k) {
      const char c = lines[j][k];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("grid entries must be 0 or 1");
      }
      grid.set(j, k, c == '1');
    }
  }
  return grid;
}

}  // namespace tauenum
