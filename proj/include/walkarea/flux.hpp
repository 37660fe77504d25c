#pragma once

#include <cstdint>

namespace walkarea {

// Rational magnetic flux gamma = 2*pi*p/q per plaquette, kept as an exact
// reduced fraction: the Bloch matrix dimension is q, so the fraction must
// never pass through floating point. p may reach 2q-1 (phases are taken on
// the doubled range [0, 4*pi) needed by half-phase convention probes).
struct RationalFlux {
  int p = 0;
  int q = 1;

  double gamma() const;
  bool operator==(const RationalFlux&) const = default;
};

// Reduces p/q by gcd and folds p into [0, 2q). q must be positive.
RationalFlux make_flux(std::int64_t p, std::int64_t q);

// Flux whose phase-per-unit-area equals 2*pi*j/m under the calibrated
// convention constant c, i.e. gamma = (2/c) * 2*pi*j/m.
RationalFlux flux_for_phase(int j, int m, int c);

}  // namespace walkarea
