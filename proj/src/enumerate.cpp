#include "walkarea/enumerate.hpp"

#include <stdexcept>
#include <vector>

#include "walkarea/errors.hpp"
#include "walkarea/parallel.hpp"
#include "walkarea/walk.hpp"

namespace walkarea {

AreaDistribution enumerate_counts(int n, int threads, Kernel kernel) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("enumerate_counts: need even n >= 0");
  if (n > kEnumerateMaxN)
    throw budget_error("enumerate_counts: n > " + std::to_string(kEnumerateMaxN) +
                       " exceeds the 4^n oracle budget (use dp_counts)");

  const Kernel k = resolve_kernel(kernel);
  const std::int64_t amax = max_area(n);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  const int nthreads = resolve_threads(threads);

  // Chunk count is a pure function of the problem so the chunk -> histogram
  // mapping never depends on the thread count; u64 sums then merge to the
  // same result in any order.
  const int num_chunks = total >= (1u << 16) ? 256 : 1;
  const std::size_t bins = static_cast<std::size_t>(2 * amax + 1);
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(num_chunks), std::vector<std::uint64_t>(bins, 0));

  auto run = (k == Kernel::Scalar) ? &count_closed_scalar
#if defined(WALKAREA_HAVE_AVX2)
                                   : &count_closed_avx2;
#else
                                   : nullptr;
#endif
  if (!run) throw std::invalid_argument("kernel not compiled into this build");

  parallel_chunks(total, num_chunks, nthreads,
                  [&](int chunk, std::uint64_t begin, std::uint64_t end) {
                    run(n, begin, end, amax, partial[static_cast<std::size_t>(chunk)].data());
                  });

  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < bins; ++i) hist[i] += p[i];

  AreaDistribution d;
  d.n = n;
  for (std::size_t i = 0; i < bins; ++i)
    if (hist[i]) d.counts[static_cast<std::int64_t>(i) - amax] = hist[i];
  return d;
}

}  // namespace walkarea
