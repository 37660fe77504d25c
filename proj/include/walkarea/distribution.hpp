#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "walkarea/bigint.hpp"

namespace walkarea {

// Exact area histogram of closed n-step walks: counts[A] is the number of
// walks with algebraic area A. Counts are big integers; the total reaches
// binomial(n, n/2)^2 which leaves 64-bit range near n = 34.
struct AreaDistribution {
  int n = 0;
  std::map<std::int64_t, BigInt> counts;

  BigInt total() const;
  bool symmetric() const;                 // counts[A] == counts[-A]
  std::int64_t max_attained_area() const; // largest |A| with a nonzero count
};

// k-th moment sum_A A^k counts[A] / total as an exact rational. k in 1..4.
BigRat moment(const AreaDistribution& d, int k);

// Canonical serializations (LF line endings, counts as decimal strings).
// CSV: header "area,count", rows sorted by area.
// JSON: {"N": n, "total": "...", "counts": [[A, "..."], ...]} sorted by area.
std::string to_csv(const AreaDistribution& d);
std::string to_json(const AreaDistribution& d);

}  // namespace walkarea
