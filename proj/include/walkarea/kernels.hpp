#pragma once

#include <cstdint>

namespace walkarea {

// Enumeration kernel contract. A walk of length n is encoded in 2n bits,
// first step in the highest bit pair, so a contiguous code range corresponds
// to a fixed prefix of leading steps (the parallel partitioning axis).
//
// The kernel walks every code in [begin, end), and for each closed walk
// increments hist[A + amax] where A is the shoelace area. hist must have
// 2*amax+1 slots. Counts fit u64 comfortably for n <= 14.
//
// Scalar and SIMD variants must produce bit-identical histograms.

void count_closed_scalar(int n, std::uint64_t begin, std::uint64_t end,
                         std::int64_t amax, std::uint64_t* hist);

#if defined(WALKAREA_HAVE_AVX2)
void count_closed_avx2(int n, std::uint64_t begin, std::uint64_t end,
                       std::int64_t amax, std::uint64_t* hist);
#endif

enum class Kernel { Auto, Scalar, Avx2 };

const char* kernel_name(Kernel k);

// Resolves Auto to the best kernel the CPU supports. Throws
// std::invalid_argument if a specific request is unavailable on this host.
Kernel resolve_kernel(Kernel requested);

}  // namespace walkarea
