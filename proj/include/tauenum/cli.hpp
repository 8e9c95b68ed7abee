#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tauenum/enumerator.hpp"
#include "tauenum/reference_table.hpp"

namespace tauenum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// CSV with header "level,tau_count,spine_count,class_count".
std::string summaries_csv(const std::vector<LevelSummary>& summaries);

/// JSON array of objects keyed level, tau_count, spine_count, class_count.
std::string summaries_json(const std::vector<LevelSummary>& summaries);

/// Runs the command line `args` (without the program name). `table` replaces
/// the embedded reference data for `verify`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err,
        std::span<const ReferenceRow> table = reference_table());

}  // namespace tauenum::cli
