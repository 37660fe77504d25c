#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "walkarea/bigint.hpp"
#include "walkarea/distribution.hpp"

namespace walkarea {

// Number of closed n-step walks on Z^2: binom(n, n/2)^2. Even n >= 0
// (odd n rejected; there are no closed odd-length walks).
BigInt omega_exact(int n);

// Leading Stirling form 4^{n+1} / (2*pi*n).  The true expansion of
// omega_exact carries a further (1 - 1/(2n) + O(1/n^2)) factor; callers
// that need the corrected prefactor multiply it on themselves (see
// trace_semiclassical).  Even n >= 2.
double omega_asymptotic(int n);

// Limit characteristic function of the normalized area A / n:
//   Phi(x) = (x/4) / sinh(x/4),
// even, Phi(0) = 1, decays like |x| e^{-|x|/4}.  Small-|x| branch uses the
// series 1 - t^2/6 + 7 t^4/360 (t = x/4) to avoid 0/0.
double characteristic_limit(double x);

// Finite-n characteristic function with the first 1/n correction, in the
// normalized ratio form
//   Phi_n(x) = Phi(x) * (1 - Phi(x)^2 / (2n)) / (1 - 1/(2n)),
// which keeps Phi_n(0) = 1 exactly.  Even n >= 2.
double characteristic_corrected(double x, int n);

// Semiclassical trace: count-scale version of the corrected characteristic,
//   T_n(x) = omega_asymptotic(n) * Phi(x) * (1 - Phi(x)^2/(2n)).
// At x = 0 this is omega_asymptotic(n) * (1 - 1/(2n)) -- the corrected
// prefactor, whose relative error against omega_exact is O(1/n^2).
double trace_semiclassical(int n, double x);

// Limit density of the normalized area a = A / n:
//   p(a) = pi / cosh^2(2*pi*a),
// the Fourier transform of Phi.  Integrates to 1, variance 1/48.
double density_limit(double a);

// Corrected density: cosine transform of characteristic_corrected,
//   p_n(a) = (1/pi) * Integral_0^X cos(x a) Phi_n(x) dx,
// trapezoid rule with Richardson step-halving for the error estimate.
// The integrand decays like x e^{-x/4}; X = 160 puts the tail below
// 1e-15.  err is the step-halving estimate |I_h - I_{h/2}| / 3.
struct QuadratureResult {
  double value = 0;
  double err = 0;
};

QuadratureResult density_corrected(double a, int n, double step = 0.05,
                                   double x_max = 160.0);

// Empirical normalized-area density from an exact distribution: a bar at
// a = A/n of height n * P_n(A) for each attained area (the n factor is the
// Jacobian of A -> A/n).  Keys are the raw integer areas.
std::map<std::int64_t, double> empirical_density(const AreaDistribution& d);

// Empirical characteristic function of the normalized area:
//   E[cos(x A / n)] under the exact distribution (odd part vanishes by
// the A -> -A symmetry).
double characteristic_empirical(const AreaDistribution& d, double x);

// Landau sublevels of the band edge at flux gamma:
//   E_l^{+-}(gamma) = +-(4 - gamma*(2l+1) + (gamma^2/16)*(1 + (2l+1)^2)),
// each carrying spectral weight gamma / (2*pi).
struct LandauLevel {
  int index = 0;
  double energy_plus = 0;
  double energy_minus = 0;
  double weight = 0;
};

std::vector<LandauLevel> landau_levels(double gamma, int num_levels);

// Landau reconstruction of the normalized trace at phase x = n*gamma:
//   tau ~ sum_l weight * (E_l/4)^n summed over both band edges, evaluated
// in the log domain against the reduced scale 4^n (so the return value is
// tau(H^n) / 4^n; multiply by omega-type prefactors as needed).  The sum
// runs down the monotone-decreasing positive branch of E_l(gamma) and
// stops when levels start rising again (beyond that the quadratic law is
// extrapolating outside its regime); truncation error there is
// exponentially small in n.  gamma = 0 returns the gamma -> 0+ limit,
// (2/(pi n)) * (1 - 1/(2n)) -- the corrected Stirling form of Omega_n/4^n.
double landau_level_sum_reduced(int n, double gamma);

}  // namespace walkarea
