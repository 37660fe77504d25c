#include "walkarea/kernels.hpp"

#include <stdexcept>

namespace walkarea {

// Reference kernel. Decodes each 2n-bit walk code (first step in the top
// bit pair -- see kernels.hpp), tracks position and the running shoelace
// cross sum, and histograms the closed walks. Everything is small-integer
// arithmetic, so this is the ground truth the SIMD variant must match
// bit for bit.
void count_closed_scalar(int n, std::uint64_t begin, std::uint64_t end,
                         std::int64_t amax, std::uint64_t* hist) {
  for (std::uint64_t code = begin; code < end; ++code) {
    int x = 0, y = 0, twice_area = 0;
    for (int j = n - 1; j >= 0; --j) {
      const unsigned s = (code >> (2 * j)) & 3u;
      // 0:+x 1:-x 2:+y 3:-y  (matches enum Step)
      const int dx = (s == 0) - (s == 1);
      const int dy = (s == 2) - (s == 3);
      twice_area += x * dy - y * dx;
      x += dx;
      y += dy;
    }
    if (x == 0 && y == 0) {
      // closed loops have an even cross sum; areas stay within +-amax
      ++hist[twice_area / 2 + amax];
    }
  }
}

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Auto:   return "auto";
    case Kernel::Scalar: return "scalar";
    case Kernel::Avx2:   return "avx2";
  }
  return "?";
}

Kernel resolve_kernel(Kernel requested) {
#if defined(WALKAREA_HAVE_AVX2)
  const bool have_avx2 = __builtin_cpu_supports("avx2");
#else
  const bool have_avx2 = false;
#endif
  switch (requested) {
    case Kernel::Auto:
      return have_avx2 ? Kernel::Avx2 : Kernel::Scalar;
    case Kernel::Scalar:
      return Kernel::Scalar;
    case Kernel::Avx2:
      if (!have_avx2)
        throw std::invalid_argument("avx2 kernel requested but not available on this host");
      return Kernel::Avx2;
  }
  throw std::invalid_argument("unknown kernel");
}

}  // namespace walkarea
