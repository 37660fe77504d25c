#include "walkarea/flux.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace walkarea {

double RationalFlux::gamma() const {
  return 2.0 * M_PI * static_cast<double>(p) / static_cast<double>(q);
}

RationalFlux make_flux(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw std::invalid_argument("make_flux: q must be positive");
  const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) { p /= g; q /= g; }
  // fold into [0, 2q): shifts gamma by multiples of 4*pi, invisible to both
  // the Bloch matrix and every phase hypothesis we probe
  p %= 2 * q;
  if (p < 0) p += 2 * q;
  return RationalFlux{static_cast<int>(p), static_cast<int>(q)};
}

RationalFlux flux_for_phase(int j, int m, int c) {
  if (m <= 0 || c <= 0) throw std::invalid_argument("flux_for_phase: m, c must be positive");
  // phase-per-unit-area c*gamma/2 == 2*pi*j/m  =>  gamma = 2*pi * 2j / (c*m)
  return make_flux(2 * static_cast<std::int64_t>(j), static_cast<std::int64_t>(c) * m);
}

}  // namespace walkarea
