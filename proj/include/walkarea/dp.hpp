#pragma once

#include "walkarea/distribution.hpp"

namespace walkarea {

inline constexpr int kDpMaxN = 32;

// Exact dynamic programming over (position, doubled shoelace area) layers.
// Matches enumerate_counts exactly on the overlap range (n = 0 included)
// and scales to n = kDpMaxN. Rejects odd or negative n
// (std::invalid_argument); n beyond the budget raises budget_error rather
// than silently truncating.
AreaDistribution dp_counts(int n);

}  // namespace walkarea
