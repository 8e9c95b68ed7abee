#include "tauenum/extension.hpp"

#include <stdexcept>

namespace tauenum {

TailDecomposition tail_decomposition(const TauFunction& tau) {
  const Level n_top = tau.size();
  if (n_top == 0) throw std::domain_error("tail decomposition of empty tau");

  TailDecomposition td;
  td.marker_levels.push_back(n_top);
  for (Level m = tau[n_top]; m != 0; m = tau[m]) {
    if (m < n_top && tau[m + 1] < tau[m] + 1) td.marker_levels.push_back(m);
  }
  td.k = td.marker_levels.size() - 1;

  td.images.reserve(td.k + 1);
  for (Level lp : td.marker_levels) td.images.push_back(tau[lp]);

  // Every l_{i+1} lies on the orbit of l_i, so step counts are ord
  // differences.
  td.steps.reserve(td.k + 1);
  for (std::size_t i = 0; i <= td.k; ++i) {
    const std::size_t next = i < td.k ? tau.ord_unchecked(td.images[i + 1]) : 0;
    td.steps.push_back(tau.ord_unchecked(td.images[i]) - next);
  }
  return td;
}

std::vector<ExtensionChoice> admissible_extensions(const TailDecomposition& td) {
  std::vector<ExtensionChoice> out;
  out.reserve(td.k + 2);
  for (std::size_t i = 0; i <= td.k; ++i) {
    out.push_back({i, td.images[i] + 1, 0});
  }
  if (td.k == 0 || td.images[td.k] > 0) out.push_back({td.k + 1, 0, 0});
  return out;
}

std::vector<ExtensionChoice> admissible_extensions(const TauFunction& tau) {
  return admissible_extensions(tail_decomposition(tau));
}

int delta(const TauFunction& tau, const TailDecomposition& td, std::size_t i,
          std::size_t j) {
  if (!(0 < i && i < j && j <= td.k + 1)) {
    throw std::domain_error("delta(" + std::to_string(i) + "," +
                            std::to_string(j) + ") needs 0 < i < j <= k+1");
  }
  const long long lhs = static_cast<long long>(tau[td.marker_levels[i] + 1]);
  return lhs == td.image(j) + 1 ? 1 : 0;
}

}  // namespace tauenum
