// AVX2 enumeration kernel: 8 walk codes per iteration in int32 lanes.
// This TU is compiled with -mavx2; callers gate on resolve_kernel, which
// checks cpu support at runtime.

#include "walkarea/kernels.hpp"

#if defined(WALKAREA_HAVE_AVX2)

#include <immintrin.h>

#include <cstdint>
#include <stdexcept>

namespace walkarea {

void count_closed_avx2(int n, std::uint64_t begin, std::uint64_t end,
                       std::int64_t amax, std::uint64_t* hist) {
  // Codes fit int32 lanes only while 4^n < 2^31.
  if (n > 15) throw std::invalid_argument("avx2 kernel: n too large for int32 lanes");

  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i three = _mm256_set1_epi32(3);
  const __m256i zero = _mm256_setzero_si256();

  std::uint64_t base = begin;
  alignas(32) std::int32_t lane_area[8];

  for (; base + 8 <= end; base += 8) {
    const __m256i code =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<std::int32_t>(base)), lane_offsets);
    __m256i x = zero, y = zero, twice_area = zero;
    for (int j = n - 1; j >= 0; --j) {
      const __m256i s = _mm256_and_si256(_mm256_srli_epi32(code, 2 * j), three);
      // masks are 0 / -1, so dx = (s==1) - (s==0) gives -1/+1/0 directly
      const __m256i is0 = _mm256_cmpeq_epi32(s, zero);
      const __m256i is1 = _mm256_cmpeq_epi32(s, _mm256_set1_epi32(1));
      const __m256i is2 = _mm256_cmpeq_epi32(s, _mm256_set1_epi32(2));
      const __m256i is3 = _mm256_cmpeq_epi32(s, three);
      const __m256i dx = _mm256_sub_epi32(is1, is0);
      const __m256i dy = _mm256_sub_epi32(is3, is2);
      twice_area = _mm256_add_epi32(
          twice_area, _mm256_sub_epi32(_mm256_mullo_epi32(x, dy),
                                       _mm256_mullo_epi32(y, dx)));
      x = _mm256_add_epi32(x, dx);
      y = _mm256_add_epi32(y, dy);
    }
    const __m256i closed =
        _mm256_and_si256(_mm256_cmpeq_epi32(x, zero), _mm256_cmpeq_epi32(y, zero));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(closed));
    if (mask) {
      _mm256_store_si256(reinterpret_cast<__m256i*>(lane_area), twice_area);
      while (mask) {
        const int lane = __builtin_ctz(static_cast<unsigned>(mask));
        ++hist[lane_area[lane] / 2 + amax];
        mask &= mask - 1;
      }
    }
  }
  // scalar tail keeps the two kernels exactly equivalent on any range
  if (base < end) count_closed_scalar(n, base, end, amax, hist);
}

}  // namespace walkarea

#endif  // WALKAREA_HAVE_AVX2
