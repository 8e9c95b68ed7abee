#pragma once

#include <cstddef>
#include <span>

#include "tauenum/checked.hpp"

namespace tauenum {

/// Published per-level totals for generic levels 1..21.
struct ReferenceRow {
  std::size_t level;
  Count tau_count;
  Count spine_count;
  Count class_count;
};

std::span<const ReferenceRow> reference_table();

}  // namespace tauenum
