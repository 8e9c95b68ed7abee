#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tauenum/checked.hpp"
#include "tauenum/dyadic.hpp"
#include "tauenum/extension.hpp"
#include "tauenum/tau.hpp"

namespace tauenum {

/// Raised when Spines * TF fails to be a positive integer. Never expected on
/// an admissible tau; it means a counting bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Per-tau data shared by the spine-factor formulas.
struct TauAnalysis {
  TailDecomposition tail;
  std::vector<bool> marked;  // indexed 0..N
  std::size_t symmetry = 0;
};

TauAnalysis analyze(const TauFunction& tau);

/// s = min{ n >= 0 : tau^n(tau(N)) is a marked level }.
std::size_t symmetry(const TauFunction& tau);

/// 2^{n_0} times the nested factor for index 1 <= i <= k + 1, i.e. the number
/// of side components at level tau(N) that realize tau(N+1) = l_i + 1. Signed
/// because the formula is also evaluated at the excluded zero choice.
std::int64_t side_component_count(const TauFunction& tau,
                                  const TauAnalysis& analysis, std::size_t i);

/// SF for the extension choice with the given index (1 for index 0).
Count spine_factor(const TauFunction& tau, const TauAnalysis& analysis,
                   std::size_t index);

/// Throws std::domain_error unless `choice` is one of
/// admissible_extensions(tau).
Count spine_factor(const TauFunction& tau, const ExtensionChoice& choice);

/// admissible_extensions(tau) with spine_factor filled in.
std::vector<ExtensionChoice> extensions_with_spine_factors(
    const TauFunction& tau);

/// Product of SF along the prefix chain tau|1, tau|2, ..., tau.
/// Throws std::domain_error if some prefix extension is not admissible.
Count spines(const TauFunction& tau);

/// mod(l) = sum_{i=1}^{l} 2^{-ord(i)}, for a marked level l.
DyadicRational moduli_sum(const TauFunction& tau, Level l);

/// Smallest n > 0 with n * mod(l) integral; t(0) = 1.
Count twist_period(const TauFunction& tau, Level l);

struct TwistFactor {
  std::size_t nonzero_marked_levels = 0;  // L
  Count max_period = 1;                   // T(tau)
  DyadicRational value;                   // 2^L / T(tau)
};

TwistFactor twist_factor(const TauFunction& tau);

/// Spines * TF; throws IntegrityError when that is not a positive integer.
Count top_from(Count spines, const TwistFactor& twist);
Count top(const TauFunction& tau);

struct CountRecord {
  Count spines = 0;
  std::size_t nonzero_marked_levels = 0;
  Count max_period = 1;
  DyadicRational twist_factor;
  Count top = 0;
};

CountRecord count_record(const TauFunction& tau);

}  // namespace tauenum
