#pragma once

#include "walkarea/distribution.hpp"
#include "walkarea/kernels.hpp"

namespace walkarea {

inline constexpr int kEnumerateMaxN = 14;  // 4^14 walks is the oracle budget

// Brute-force oracle: enumerates all 4^n walks directly and histograms the
// areas of the closed ones (n = 0 gives the empty walk, area 0). Rejects
// odd or negative n (std::invalid_argument) and n > kEnumerateMaxN
// (budget_error). Result is independent of thread count and kernel choice
// (integer arithmetic only).
AreaDistribution enumerate_counts(int n, int threads = 0, Kernel kernel = Kernel::Auto);

}  // namespace walkarea
