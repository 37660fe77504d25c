#include "walkarea/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "walkarea/errors.hpp"
#include "walkarea/walk.hpp"

namespace walkarea {

namespace {

struct Kahan {
  double sum = 0, c = 0;
  void add(double v) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

void require_even_positive(int n, const char* who) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": need even n >= 2");
}

}  // namespace

BigInt omega_exact(int n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("omega_exact: need even n >= 0");
  const BigInt b = binomial(n, n / 2);
  return b * b;
}

double omega_asymptotic(int n) {
  require_even_positive(n, "omega_asymptotic");
  // log-domain: 4^{n+1} overflows double near n = 510
  return std::exp((n + 1) * std::log(4.0) - std::log(2.0 * M_PI * n));
}

double characteristic_limit(double x) {
  const double t = x / 4.0;
  if (std::abs(x) < 1e-4) {
    // t/sinh t = 1 - t^2/6 + 7t^4/360 - ...; next term ~1e-26 at the cutoff
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
  }
  return t / std::sinh(t);
}

double characteristic_corrected(double x, int n) {
  require_even_positive(n, "characteristic_corrected");
  const double phi = characteristic_limit(x);
  // ratio form: dividing by the x=0 bracket keeps Phi_n(0) = 1 exactly,
  // as a characteristic function must be
  return phi * (1.0 - phi * phi / (2.0 * n)) / (1.0 - 1.0 / (2.0 * n));
}

double trace_semiclassical(int n, double x) {
  require_even_positive(n, "trace_semiclassical");
  const double phi = characteristic_limit(x);
  return omega_asymptotic(n) * phi * (1.0 - phi * phi / (2.0 * n));
}

double density_limit(double a) {
  const double c = std::cosh(2.0 * M_PI * a);
  return M_PI / (c * c);
}

namespace {

// Trapezoid on [0, x_max] of cos(x a) * Phi_n(x) with half-weight
// endpoints: equals the even periodization of the full inverse transform.
// The integrand is analytic and decays like x e^{-x/4}, so the trapezoid
// error is dominated by endpoint truncation, not by h^2 -- step halving
// measures what little is left.
double half_line_cosine(double a, int n, double step, double x_max) {
  const std::int64_t npts = static_cast<std::int64_t>(std::ceil(x_max / step));
  Kahan acc;
  acc.add(0.5 * characteristic_corrected(0.0, n));
  for (std::int64_t i = 1; i < npts; ++i) {
    const double x = static_cast<double>(i) * step;
    acc.add(std::cos(x * a) * characteristic_corrected(x, n));
  }
  const double xe = static_cast<double>(npts) * step;
  acc.add(0.5 * std::cos(xe * a) * characteristic_corrected(xe, n));
  return acc.sum * step / M_PI;
}

}  // namespace

QuadratureResult density_corrected(double a, int n, double step, double x_max) {
  require_even_positive(n, "density_corrected");
  if (step <= 0 || x_max <= 0)
    throw std::invalid_argument("density_corrected: step and x_max must be positive");
  if (characteristic_corrected(x_max, n) > 1e-12)
    throw quadrature_error("density_corrected: tail at x_max above 1e-12; raise x_max");
  const double coarse = half_line_cosine(a, n, step, x_max);
  const double fine = half_line_cosine(a, n, step / 2.0, x_max);
  return QuadratureResult{fine, std::abs(fine - coarse) / 3.0};
}

std::map<std::int64_t, double> empirical_density(const AreaDistribution& d) {
  std::map<std::int64_t, double> out;
  const BigInt total = d.total();
  if (d.n <= 0 || total == 0)
    throw std::invalid_argument("empirical_density: empty distribution");
  for (const auto& [a, c] : d.counts) {
    // bar height n * P(A): the 1/n lattice spacing of a = A/n is the
    // Jacobian that makes these comparable to the continuum densities
    out[a] = BigRat(BigInt(d.n) * c, total).convert_to<double>();
  }
  return out;
}

double characteristic_empirical(const AreaDistribution& d, double x) {
  if (d.n <= 0) throw std::invalid_argument("characteristic_empirical: empty distribution");
  const double total = d.total().convert_to<double>();
  Kahan acc;
  for (const auto& [a, c] : d.counts)
    acc.add(c.convert_to<double>() *
            std::cos(x * static_cast<double>(a) / static_cast<double>(d.n)));
  return acc.sum / total;
}

std::vector<LandauLevel> landau_levels(double gamma, int num_levels) {
  if (num_levels < 0) throw std::invalid_argument("landau_levels: num_levels >= 0");
  std::vector<LandauLevel> out;
  out.reserve(static_cast<std::size_t>(num_levels));
  for (int l = 0; l < num_levels; ++l) {
    const double u = 2.0 * l + 1.0;
    const double e = 4.0 - gamma * u + (gamma * gamma / 16.0) * (1.0 + u * u);
    out.push_back(LandauLevel{l, e, -e, gamma / (2.0 * M_PI)});
  }
  return out;
}

double landau_level_sum_reduced(int n, double gamma) {
  require_even_positive(n, "landau_level_sum_reduced");
  if (gamma < 0) throw std::invalid_argument("landau_level_sum_reduced: gamma >= 0");
  if (gamma == 0.0) {
    // gamma -> 0+ limit of the sum below: the corrected Stirling form
    return 2.0 / (M_PI * n) * (1.0 - 1.0 / (2.0 * n));
  }
  // tau(H^n)/4^n = (gamma/pi) * sum_l (E_l/4)^n for even n (both band
  // edges contribute equally). The quadratic law holds on the
  // monotone-decreasing branch of E_l; past its vertex the parabola turns
  // back up, which is the law extrapolated outside its regime, so we stop
  // there. Contributions at the stopping point are already suppressed by
  // (E/4)^n by many orders.
  Kahan acc;
  double prev = 5.0;  // above any admissible level
  for (int l = 0;; ++l) {
    const double u = 2.0 * l + 1.0;
    const double e = 4.0 - gamma * u + (gamma * gamma / 16.0) * (1.0 + u * u);
    if (e <= 0.0 || e >= prev) break;
    prev = e;
    acc.add(std::exp(n * std::log(e / 4.0)));  // log domain: (E/4)^n
  }
  return gamma / M_PI * acc.sum;
}

}  // namespace walkarea
