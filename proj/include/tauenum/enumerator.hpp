#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tauenum/checked.hpp"
#include "tauenum/tau.hpp"

namespace tauenum {

/// Exact totals over all admissible tau of one length.
struct LevelSummary {
  std::size_t level = 0;
  Count tau_count = 0;
  Count spine_count = 0;
  Count class_count = 0;

  LevelSummary& operator+=(const LevelSummary& other) {
    tau_count = checked_add(tau_count, other.tau_count);
    spine_count = checked_add(spine_count, other.spine_count);
    class_count = checked_add(class_count, other.class_count);
    return *this;
  }
  friend bool operator==(const LevelSummary&, const LevelSummary&) = default;
};

/// Called once per admissible tau with Spines(tau) and Top(tau).
using TauVisitor =
    std::function<void(const TauFunction& tau, Count spines, Count top)>;

struct EnumerationOptions {
  std::size_t max_level = 1;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Subtrees rooted at this length are the units of parallel work.
  std::size_t split_depth = 8;
};

/// Enumeration failed (e.g. out of memory); no partial results survive.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Summaries for levels 1..max_level. With a visitor the walk is serial and
/// each level's tau-functions arrive in ascending lexicographic order.
std::vector<LevelSummary> enumerate(const EnumerationOptions& options,
                                    const TauVisitor& visitor = {});

inline std::vector<LevelSummary> enumerate(std::size_t max_level,
                                           const TauVisitor& visitor = {}) {
  return enumerate(EnumerationOptions{max_level, 1, 8}, visitor);
}

inline constexpr std::size_t kBruteForceCap = 10;

/// Filters every sequence with tau(1) = 0 and tau(n) <= n - 1 through
/// check_admissible(). Levels are visited in order, each in ascending
/// lexicographic order. Refuses (std::invalid_argument) above `cap`.
std::vector<LevelSummary> brute_force_enumerate(
    std::size_t max_level, const TauVisitor& visitor = {},
    std::size_t cap = kBruteForceCap);

struct RatioRow {
  std::size_t level = 0;  // ratio of level over level - 1
  std::string text;       // three decimals, round half up
};

/// "a/b" to three decimals, round half up.
std::string format_ratio(Count numerator, Count denominator);

/// classCount(N) / classCount(N-1) for each consecutive pair; throws
/// std::invalid_argument if the levels are not consecutive.
std::vector<RatioRow> ratios(const std::vector<LevelSummary>& summaries);

enum class TreeFormat { kDot };

inline constexpr std::size_t kTreeCap = 8;

/// The tau-extension prefix tree to max_level as a Graphviz digraph; each
/// node is labeled with its tau, Spines, TF and Top.
std::string export_prefix_tree(std::size_t max_level,
                               TreeFormat format = TreeFormat::kDot,
                               std::size_t cap = kTreeCap);

}  // namespace tauenum
