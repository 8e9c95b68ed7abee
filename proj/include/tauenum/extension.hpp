#pragma once

#include <cstddef>
#include <vector>

#include "tauenum/checked.hpp"
#include "tauenum/tau.hpp"

namespace tauenum {

/// Marker data of the orbit N -> tau(N) -> ... -> 0.
///
/// marker_levels holds l'_0 = N > l'_1 > ... > l'_k where l'_1..l'_k are the
/// markers on the orbit; images holds l_i = tau(l'_i); steps holds n_i with
/// tau^{n_i}(l_i) = l_{i+1} and tau^{n_k}(l_k) = 0.
struct TailDecomposition {
  std::size_t k = 0;
  std::vector<Level> marker_levels;
  std::vector<Level> images;
  std::vector<std::size_t> steps;

  /// l_i with the convention l_{k+1} = -1.
  long long image(std::size_t i) const {
    return i == k + 1 ? -1 : static_cast<long long>(images.at(i));
  }
};

TailDecomposition tail_decomposition(const TauFunction& tau);

/// One admissible value for tau(N+1) = l_index + 1 (l_{k+1} = -1).
struct ExtensionChoice {
  std::size_t index = 0;
  Level value = 0;
  /// Zero until filled in by the counting module.
  Count spine_factor = 0;

  friend bool operator==(const ExtensionChoice&,
                         const ExtensionChoice&) = default;
};

/// Distinct admissible values of tau(N+1), descending. Index k+1 (value 0)
/// appears iff l_k > 0 or k = 0.
std::vector<ExtensionChoice> admissible_extensions(const TauFunction& tau);
std::vector<ExtensionChoice> admissible_extensions(const TailDecomposition& td);

/// 1 iff tau(l'_i + 1) = l_j + 1, for 0 < i < j <= k + 1.
int delta(const TauFunction& tau, const TailDecomposition& td, std::size_t i,
          std::size_t j);

}  // namespace tauenum
