#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "walkarea/bigint.hpp"
#include "walkarea/distribution.hpp"
#include "walkarea/flux.hpp"

#include <Eigen/Dense>

namespace walkarea {

// Magnetic Bloch matrix for flux gamma = 2*pi*p/q at quasi-momentum
// (k1, k2).  Landau-gauge q x q block of the lattice Hamiltonian
//   sum over unit hops of magnetic translations:
//     diagonal        2*cos(k2 + n*gamma)
//     n <-> n+1 hops  e^{+i k1} / e^{-i k1}
//     wraparound      e^{+i q k1} / e^{-i q k1}  added into the corners.
// The corner terms are *added*: for q = 1 the single entry is
// 2 cos k1 + 2 cos k2, and for q = 2 the hop and wrap land in the same
// entry giving off-diagonal 2 cos k1... see unit tests for the pinned
// q = 1, 2 spectra.  Hermitian by construction.
Eigen::MatrixXcd bloch_matrix(const RationalFlux& flux, double k1, double k2);

// Normalized trace per unit area of H^n at the given flux:
//   tau(H^n) = (1/q) * avg over the Brillouin zone of tr B(k)^n.
// tr B(k)^n is a trig polynomial of degree <= n in each k, so a uniform
// (grid x grid) product rule with grid >= n+1 integrates it *exactly*.
// grid == 0 picks n+1.  Result is real up to roundoff; we keep the
// imaginary part so callers can assert it vanishes.
struct TraceValue {
  int n = 0;
  RationalFlux flux;
  std::complex<double> value;
  int grid = 0;
};

TraceValue trace_power(int n, const RationalFlux& flux, int grid = 0,
                       int threads = 0);

// Sum over closed n-step walks of e^{i*phase*A} evaluated directly from an
// exact area distribution -- the combinatorial side of the trace identity.
std::complex<double> area_generating_sum(const AreaDistribution& dist,
                                         double phase);

// Measures the phase-per-unit-area constant c in
//   tau(H^n) = sum over closed walks of e^{i c (gamma/2) A}
// by comparing spectral traces against the exact n = 4 and n = 6
// distributions across several fluxes.  c = 2 is the calibrated value
// (i.e. phase = gamma * A); report records the residual of the best and
// the runner-up hypothesis so the margin is auditable.
struct CalibrationReport {
  int c = 0;                  // winning integer constant
  double best_residual = 0;   // max |tau - walk sum| over probes for c
  double runner_up_residual = 0;
  std::vector<std::string> probe_lines;  // per-probe audit rows
  std::vector<TraceValue> traces;        // the spectral side, for CSV audit
};

CalibrationReport calibrate_phase(int threads = 0);

// Exact inversion: recovers the integer area counts of closed n-step walks
// from spectral traces alone.  Areas live in [-Amax, Amax] with
// Amax = floor(n/4)*ceil(n/4), so M = 2*Amax + 1 fluxes on the calibrated
// phase grid determine the counts through a length-M DFT.  Counts are
// exact integers; we round and keep the worst residue as a health check.
// Doubles hold counts exactly only while total <= 2^53, i.e. n <= 24.
struct InvertResult {
  AreaDistribution dist;
  double max_residue = 0;       // worst |raw - round(raw)| over all areas
  double total_error = 0;       // |sum counts - binom(n, n/2)^2| before gate
};

inline constexpr int kInvertMaxN = 24;

InvertResult invert_counts(int n, int threads = 0);

// Same inversion without the integer gate: returns P_n(A) as doubles for
// any even n the spectral side can afford.  Useful past n = 24.
std::map<std::int64_t, double> invert_probabilities(int n, int threads = 0);

// Landau-level check near the band edge: for small flux the top of the
// spectrum quantizes as
//   E_l(gamma) ~ 4 - gamma*(2l+1) + (gamma^2/16)*(1 + (2l+1)^2).
// We measure the top eigenvalues at gamma = 2*pi/q (averaged over a small
// k-grid; sublevel bandwidth is exponentially small) and report deviations
// from the quadratic law, which shrink like gamma^3.
struct LandauLevelCheck {
  RationalFlux flux;
  std::vector<double> measured;   // top num_levels eigenvalue means
  std::vector<double> predicted;  // quadratic Landau law
  double max_deviation = 0;
};

LandauLevelCheck landau_edge_check(const RationalFlux& flux, int num_levels,
                                   int kgrid = 8);

// CSV of trace values: header "N,p,q,re,im,grid", one row per entry.
std::string trace_table_csv(const std::vector<TraceValue>& rows);

}  // namespace walkarea
