#include "walkarea/dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "walkarea/errors.hpp"
#include "walkarea/walk.hpp"

namespace walkarea {

namespace {

// A walk that closes in n steps satisfies |x|+|y| <= min(k, n-k) after k
// steps (can't get further out than it can get back). The doubled shoelace
// increment at step k is bounded by the position radius before the step,
// so |2A| never exceeds the prefix sums of that bound.
int radius_bound(int k, int n) { return std::min(k, n - k); }

}  // namespace

AreaDistribution dp_counts(int n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("dp_counts: need even n >= 0");
  if (n > kDpMaxN)
    throw budget_error("dp_counts: n > " + std::to_string(kDpMaxN) +
                       " exceeds the dense-layer budget");

  const int m = n / 2;  // max |x|, |y| ever reachable
  int area_bound = 0;   // max |2A| accumulated over all n steps
  for (int k = 1; k <= n; ++k) area_bound += std::min(k - 1, n - k + 1);

  const int w = 2 * m + 1;
  const int dw = 2 * area_bound + 1;
  const std::size_t layer_size = static_cast<std::size_t>(w) * w * dw;
  auto idx = [&](int x, int y, int d) {
    return (static_cast<std::size_t>(x + m) * w + static_cast<std::size_t>(y + m)) * dw +
           static_cast<std::size_t>(d + area_bound);
  };

  std::vector<BigInt> cur(layer_size), next(layer_size);
  cur[idx(0, 0, 0)] = 1;
  int dmax_prev = 0;  // tight running bound on |2A| in the current layer

  for (int k = 1; k <= n; ++k) {
    const int r_src = radius_bound(k - 1, n);
    const int r_dst = radius_bound(k, n);
    const int dmax = dmax_prev + std::min(k - 1, n - k + 1);
    // clear only the region the destination layer can touch
    for (int x = -r_dst; x <= r_dst; ++x)
      for (int y = -(r_dst - std::abs(x)); y <= r_dst - std::abs(x); ++y)
        for (int d = -dmax; d <= dmax; ++d) next[idx(x, y, d)] = 0;

    for (int x = -r_src; x <= r_src; ++x) {
      for (int y = -(r_src - std::abs(x)); y <= r_src - std::abs(x); ++y) {
        for (int d = -dmax_prev; d <= dmax_prev; ++d) {
          const BigInt& c = cur[idx(x, y, d)];
          if (c.is_zero()) continue;
          // four unit steps; shoelace cross term x*dy - y*dx
          static constexpr int DX[4] = {1, -1, 0, 0};
          static constexpr int DY[4] = {0, 0, 1, -1};
          for (int s = 0; s < 4; ++s) {
            const int nx = x + DX[s], ny = y + DY[s];
            if (std::abs(nx) + std::abs(ny) > r_dst) continue;
            const int nd = d + x * DY[s] - y * DX[s];
            next[idx(nx, ny, nd)] += c;
          }
        }
      }
    }
    cur.swap(next);
    dmax_prev = dmax;
  }

  AreaDistribution dist;
  dist.n = n;
  for (int d = -dmax_prev; d <= dmax_prev; ++d) {
    const BigInt& c = cur[idx(0, 0, d)];
    if (c.is_zero()) continue;
    if (d % 2 != 0)
      throw consistency_error("dp_counts: odd doubled area on a closed loop");
    dist.counts[d / 2] = c;
  }
  return dist;
}

}  // namespace walkarea
