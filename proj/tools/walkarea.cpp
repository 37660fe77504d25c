// walkarea: exact area statistics of closed square-lattice walks, their
// spectral (Harper-operator) counterparts, and the semiclassical limit law.
//
// Subcommands: counts, oracle, charfn, density, figure1, verify, calibrate.
// Exit codes: 0 ok, 1 usage, 2 verification/consistency failure, 3 budget.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "walkarea/asymptotics.hpp"
#include "walkarea/csv.hpp"
#include "walkarea/distribution.hpp"
#include "walkarea/dp.hpp"
#include "walkarea/enumerate.hpp"
#include "walkarea/errors.hpp"
#include "walkarea/harper.hpp"
#include "walkarea/parallel.hpp"
#include "walkarea/walk.hpp"

namespace {

using namespace walkarea;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

Kernel parse_kernel(const std::string& s) {
  if (s == "auto") return Kernel::Auto;
  if (s == "scalar") return Kernel::Scalar;
  if (s == "avx2") return Kernel::Avx2;
  throw usage_error("unknown kernel '" + s + "' (auto|scalar|avx2)");
}

// The no-bad-files gate: every distribution leaves the program only after
// its total matched the closed form.
void gate_total(const AreaDistribution& d) {
  const BigInt expect = omega_exact(d.n);
  const BigInt got = d.total();
  if (got != expect) {
    std::ostringstream dump;
    dump << "engine inconsistency at n=" << d.n << ": total " << got.str()
         << " != binomial(n,n/2)^2 = " << expect.str() << "\n"
         << to_csv(d);
    throw consistency_error(dump.str());
  }
}

void emit_distribution(const AreaDistribution& d, const std::string& out,
                       const std::string& format) {
  gate_total(d);
  if (format == "csv")
    emit(to_csv(d), out);
  else if (format == "json")
    emit(to_json(d), out);
  else
    throw usage_error("unknown format '" + format + "' (csv|json)");
}

void require_even(int n, const char* what) {
  if (n < 0 || n % 2 != 0)
    throw usage_error(std::string(what) + ": --n must be even and >= 0 "
                      "(closed walks exist only for even length)");
}

int cmd_counts(int n, const std::string& engine, const std::string& kernel,
               int threads, const std::string& out, const std::string& format) {
  require_even(n, "counts");
  AreaDistribution d;
  if (engine == "enumerate") {
    if (n > kEnumerateMaxN)
      throw usage_error("engine 'enumerate' handles n <= " +
                        std::to_string(kEnumerateMaxN) + "; use --engine dp");
    d = enumerate_counts(n, threads, parse_kernel(kernel));
  } else if (engine == "dp") {
    d = dp_counts(n);  // n > budget raises budget_error (exit 3)
  } else if (engine == "spectral") {
    if (n > kInvertMaxN)
      throw usage_error("engine 'spectral' recovers exact integers only for n <= " +
                        std::to_string(kInvertMaxN) + "; use --engine dp");
    if (n < 2)
      throw usage_error("engine 'spectral' needs n >= 2; use --engine dp");
    d = invert_counts(n, threads).dist;
  } else {
    throw usage_error("unknown engine '" + engine + "' (enumerate|dp|spectral)");
  }
  emit_distribution(d, out, format);
  return 0;
}

int cmd_oracle(int n, const std::string& kernel, int threads,
               const std::string& out, const std::string& format) {
  require_even(n, "oracle");
  if (n > kEnumerateMaxN)
    throw usage_error("oracle enumerates 4^n walks and handles n <= " +
                      std::to_string(kEnumerateMaxN));
  emit_distribution(enumerate_counts(n, threads, parse_kernel(kernel)), out, format);
  return 0;
}

std::string charfn_csv(int n, double x_max, double step) {
  std::string csv = "x,phi,order\n";
  const auto npts = static_cast<std::int64_t>(std::floor(x_max / step + 0.5));
  for (std::int64_t i = 0; i <= npts; ++i) {
    const double x = static_cast<double>(i) * step;
    csv += format_double(x) + ',' + format_double(characteristic_limit(x)) + ",limit\n";
  }
  if (n > 0) {
    for (std::int64_t i = 0; i <= npts; ++i) {
      const double x = static_cast<double>(i) * step;
      csv += format_double(x) + ',' + format_double(characteristic_corrected(x, n)) +
             ",corrected_n" + std::to_string(n) + '\n';
    }
  }
  return csv;
}

int cmd_charfn(int n, double x_max, double step, const std::string& out) {
  if (n != 0) require_even(n, "charfn");
  if (x_max <= 0 || step <= 0) throw usage_error("charfn: need positive --x-max and --step");
  emit(charfn_csv(n, x_max, step), out);
  return 0;
}

std::string density_csv(int n, double a_max, double step) {
  std::string csv = "a,p,order\n";
  const auto half = static_cast<std::int64_t>(std::floor(a_max / step + 0.5));
  for (std::int64_t i = -half; i <= half; ++i) {
    const double a = static_cast<double>(i) * step;
    csv += format_double(a) + ',' + format_double(density_limit(a)) + ",limit\n";
  }
  if (n > 0) {
    for (std::int64_t i = -half; i <= half; ++i) {
      const double a = static_cast<double>(i) * step;
      csv += format_double(a) + ',' + format_double(density_corrected(a, n).value) +
             ",corrected_n" + std::to_string(n) + '\n';
    }
  }
  return csv;
}

int cmd_density(int n, double a_max, double step, const std::string& out) {
  if (n != 0) require_even(n, "density");
  if (a_max <= 0 || step <= 0) throw usage_error("density: need positive --a-max and --step");
  emit(density_csv(n, a_max, step), out);
  return 0;
}

std::string empirical_csv(const AreaDistribution& d) {
  std::string csv = "a,p,order\n";
  const std::string tag = ",empirical_n" + std::to_string(d.n) + "\n";
  for (const auto& [a, p] : empirical_density(d))
    csv += format_double(static_cast<double>(a) / d.n) + ',' + format_double(p) + tag;
  return csv;
}

int cmd_figure1(const std::string& out_dir) {
  const std::string dir = out_dir.empty() ? "." : out_dir;
  std::filesystem::create_directories(dir);
  auto path = [&](const std::string& name) { return dir + "/" + name; };
  std::vector<std::string> written;

  for (int n : {16, 18, 20}) {
    const AreaDistribution d = dp_counts(n);
    gate_total(d);
    const std::string name = "empirical_n" + std::to_string(n) + ".csv";
    write_file(path(name), empirical_csv(d));
    written.push_back(name);
  }

  // curves on a uniform a-grid wide enough to cover the visible support
  const double step = 0.005;
  const std::int64_t half = 120;  // |a| <= 0.6
  {
    std::string csv = "a,p,order\n";
    for (std::int64_t i = -half; i <= half; ++i) {
      const double a = static_cast<double>(i) * step;
      csv += format_double(a) + ',' + format_double(density_limit(a)) + ",limit\n";
    }
    write_file(path("density_limit.csv"), csv);
    written.push_back("density_limit.csv");
  }
  for (int n : {20, 40}) {
    std::string csv = "a,p,order\n";
    const std::string tag = ",corrected_n" + std::to_string(n) + "\n";
    for (std::int64_t i = -half; i <= half; ++i) {
      const double a = static_cast<double>(i) * step;
      csv += format_double(a) + ',' + format_double(density_corrected(a, n).value) + tag;
    }
    const std::string name = "density_corrected_n" + std::to_string(n) + ".csv";
    write_file(path(name), csv);
    written.push_back(name);
  }

  std::string gp =
      "# Area distribution of closed N-step walks: finite-N data (symbols),\n"
      "# N->infinity limit law (solid), 1/N-corrected curves (dashed).\n"
      "set datafile separator ','\n"
      "set terminal pngcairo size 900,650\n"
      "set output 'figure1.png'\n"
      "set xlabel 'a = A/N'\n"
      "set ylabel 'P(a)'\n"
      "set xrange [-0.6:0.6]\n"
      "set key top right\n"
      "plot 'empirical_n16.csv' skip 1 using 1:2 with points pt 4 title 'N=16', \\\n"
      "     'empirical_n18.csv' skip 1 using 1:2 with points pt 6 title 'N=18', \\\n"
      "     'empirical_n20.csv' skip 1 using 1:2 with points pt 8 title 'N=20', \\\n"
      "     'density_limit.csv' skip 1 using 1:2 with lines lw 2 lc 'black' title 'limit', \\\n"
      "     'density_corrected_n20.csv' skip 1 using 1:2 with lines dt 2 lc 'red' title 'corrected N=20', \\\n"
      "     'density_corrected_n40.csv' skip 1 using 1:2 with lines dt 4 lc 'blue' title 'corrected N=40'\n";
  write_file(path("figure1.gp"), gp);
  written.push_back("figure1.gp");

  for (const auto& name : written) std::cout << "wrote " << dir << "/" << name << "\n";
  return 0;
}

int cmd_calibrate(int threads, const std::string& out) {
  const CalibrationReport report = calibrate_phase(threads);
  for (const auto& line : report.probe_lines) std::cout << line << "\n";
  std::cout << "calibrated c=" << report.c
            << " best_residual=" << format_double(report.best_residual)
            << " runner_up_residual=" << format_double(report.runner_up_residual) << "\n";
  if (!out.empty()) write_file(out, trace_table_csv(report.traces));
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the cross-engine / cross-theory residue battery. Prints one line
// per check (no timings -- output is a byte-determinism target) and exits
// nonzero if anything fails.

class Verifier {
 public:
  Verifier(int max_n, int threads) : max_n_(max_n), threads_(threads) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
    if (!ok) failures_++;
  }

  const AreaDistribution& dp(int n) {
    auto it = dp_cache_.find(n);
    if (it == dp_cache_.end()) it = dp_cache_.emplace(n, dp_counts(n)).first;
    return it->second;
  }

  int run();

 private:
  int max_n_;
  int threads_;
  int failures_ = 0;
  std::map<int, AreaDistribution> dp_cache_;
};

int Verifier::run() {
  // --- calibration assertion -----------------------------------------
  {
    const CalibrationReport rep = calibrate_phase(threads_);
    check("calibration-constant", rep.c == 2,
          "c=" + std::to_string(rep.c) +
              " best_residual=" + format_double(rep.best_residual) +
              " runner_up_residual=" + format_double(rep.runner_up_residual));
    check("calibration-separation",
          rep.best_residual <= 1e-9 && rep.runner_up_residual >= 0.1,
          "thresholds 1e-9 / 0.1");
  }

  // --- oracle vs dp, plus walk-core invariants ------------------------
  {
    bool equal = true, symmetric = true, amax_attained = true, odd_moments = true;
    int bad_n = -1;
    for (int n = 0; n <= std::min(max_n_, kEnumerateMaxN); n += 2) {
      const AreaDistribution oracle = enumerate_counts(n, threads_);
      if (oracle.counts != dp(n).counts) { equal = false; bad_n = n; }
      if (!oracle.symmetric()) { symmetric = false; bad_n = n; }
      if (n >= 2 && oracle.max_attained_area() != max_area(n)) {
        amax_attained = false;
        bad_n = n;
      }
      if (n >= 2 && (moment(oracle, 1) != 0 || moment(oracle, 3) != 0)) {
        odd_moments = false;
        bad_n = n;
      }
    }
    const std::string upto = "n<=" + std::to_string(std::min(max_n_, kEnumerateMaxN));
    check("oracle-vs-dp " + upto, equal,
          equal ? "maps identical" : "mismatch at n=" + std::to_string(bad_n));
    check("oracle-symmetry " + upto, symmetric, "C(n,A)=C(n,-A)");
    check("oracle-max-area-attained " + upto, amax_attained,
          "max |A| = floor(n/4)*ceil(n/4)");
    check("oracle-odd-moments-zero " + upto, odd_moments, "moments 1,3 vanish");
  }

  // --- dp totals and variance trend ----------------------------------
  {
    bool totals = true;
    int bad_n = -1;
    const int cap = std::min(max_n_, kDpMaxN);
    for (int n = 0; n <= cap; n += 2) {
      if (dp(n).total() != omega_exact(n)) { totals = false; bad_n = n; }
    }
    check("dp-total-closed-form n<=" + std::to_string(cap), totals,
          totals ? "total = binomial(n,n/2)^2" : "mismatch at n=" + std::to_string(bad_n));

    bool var_trend = true;
    BigRat prev = 0;
    for (int n = 4; n <= cap; n += 2) {
      BigRat v = moment(dp(n), 2) / (n * n);
      if (!(v > prev) || !(v < BigRat(1, 48))) var_trend = false;
      prev = v;
    }
    check("dp-variance-trend", var_trend, "Var(A)/n^2 increasing toward 1/48");
  }

  // --- dp vs spectral inversion ---------------------------------------
  {
    bool equal = true;
    int bad_n = -1;
    double worst_residue = 0;
    const int cap = std::min(max_n_, 20);
    for (int n = 2; n <= cap; n += 2) {
      const InvertResult inv = invert_counts(n, threads_);
      worst_residue = std::max(worst_residue, inv.max_residue);
      if (inv.dist.counts != dp(n).counts || inv.total_error != 0) {
        equal = false;
        bad_n = n;
      }
    }
    check("dp-vs-spectral n<=" + std::to_string(cap), equal,
          (equal ? std::string("maps identical") : "mismatch at n=" + std::to_string(bad_n)) +
              " max_rounding_residue=" + format_double(worst_residue));
  }

  // --- trace invariants ------------------------------------------------
  {
    bool zero_flux = true;
    double worst = 0;
    for (int n = 2; n <= std::min(max_n_, kInvertMaxN); n += 2) {
      const double tau = trace_power(n, make_flux(0, 1), 0, threads_).value.real();
      const double rel =
          std::abs(tau / omega_exact(n).convert_to<double>() - 1.0);
      worst = std::max(worst, rel);
      if (rel > 1e-10) zero_flux = false;
    }
    check("trace-zero-flux-closed-form", zero_flux,
          "max relative residue " + format_double(worst) + " (tol 1e-10)");

    const RationalFlux f25 = make_flux(2, 5);
    const double t0 = trace_power(10, make_flux(0, 1), 0, threads_).value.real();
    const double tf = trace_power(10, f25, 0, threads_).value.real();
    const double tr = trace_power(10, make_flux(3, 5), 0, threads_).value.real();
    check("trace-bounded-by-zero-flux", std::abs(tf) <= t0 * (1 + 1e-12),
          "|tau(2/5)| <= tau(0) at n=10");
    check("trace-flux-reflection", std::abs(tf - tr) <= 1e-10 * std::max(1.0, std::abs(tf)),
          "tau(p/q) = tau((q-p)/q), residue " + format_double(std::abs(tf - tr)));

    const double g1 = trace_power(10, f25, 11, threads_).value.real();
    const double g2 = trace_power(10, f25, 22, threads_).value.real();
    check("trace-grid-doubling", std::abs(g2 - g1) <= 1e-10 * std::max(1.0, std::abs(g1)),
          "residue " + format_double(std::abs(g2 - g1)) + " (tol rel 1e-10)");
  }

  // --- Landau levels at the band edge ---------------------------------
  {
    const LandauLevelCheck zero = landau_edge_check(make_flux(0, 1), 1, 8);
    check("landau-zero-flux-edge", std::abs(zero.measured[0] - 4.0) <= 1e-12,
          "edge " + format_double(zero.measured[0]));

    const double d32 = landau_edge_check(make_flux(1, 32), 3, 8).max_deviation;
    const double d64 = landau_edge_check(make_flux(1, 64), 3, 8).max_deviation;
    check("landau-gamma-cubed-scaling", d64 * 6.0 <= d32,
          "deviation " + format_double(d32) + " -> " + format_double(d64) +
              " when q doubles (need >= 6x shrink)");

    // level-sum reconstruction against the closed semiclassical form
    bool ok = true;
    std::string detail = "n=100, x in {1,2,4}: rel dev";
    for (double x : {1.0, 2.0, 4.0}) {
      const int n = 100;
      const double phi = characteristic_limit(x);
      const double reduced_closed =
          2.0 / (M_PI * n) * phi * (1.0 - phi * phi / (2.0 * n));
      const double level_sum = landau_level_sum_reduced(n, x / n);
      const double rel = std::abs(level_sum / reduced_closed - 1.0);
      detail += " " + format_double(rel);
      if (rel > 1e-3) ok = false;
    }
    check("landau-level-sum-vs-closed-form", ok, detail + " (tol 1e-3)");
  }

  // --- asymptotics of the total count ----------------------------------
  {
    const double r20 = omega_exact(20).convert_to<double>() / omega_asymptotic(20);
    bool structure = true;
    for (int n = 10; n <= std::min(max_n_, 30); n += 2) {
      const double r = omega_exact(n).convert_to<double>() / omega_asymptotic(n);
      if (std::abs(2.0 * n * (r - 1.0) + 1.0) > 2.0 / n) structure = false;
    }
    check("omega-ratio-structure", structure,
          "ratio = 1 - 1/(2n) + O(1/n^2); at n=20: " + format_double(r20));
    bool contracts = true;
    for (int n : {10, 14}) {
      if (2 * n > kDpMaxN) continue;
      const double rn = omega_exact(n).convert_to<double>() / omega_asymptotic(n);
      const double r2n = omega_exact(2 * n).convert_to<double>() / omega_asymptotic(2 * n);
      if (!(std::abs(r2n - 1.0) <= 0.6 * std::abs(rn - 1.0))) contracts = false;
    }
    check("omega-ratio-contraction", contracts,
          "|ratio(2n)-1| <= 0.6 |ratio(n)-1| (asymptotically 1/2)");
  }

  // --- limit law and characteristic function ---------------------------
  {
    check("density-limit-center", density_limit(0.0) == M_PI, "p(0) = pi exactly");

    // trapezoid over [-3,3]: integrand decays like e^{-4 pi |a|}, so the
    // truncation tail (~6e-16) dominates the quadrature error
    const double h = 1e-3;
    double mass = 0, second = 0;
    {
      // plain left/right symmetric trapezoid with Kahan would be overkill:
      // 6001 well-scaled positive terms; double sum is already ~1e-13
      double s0 = 0, s2 = 0;
      const int half = 3000;
      for (int i = -half; i <= half; ++i) {
        const double a = i * h;
        const double w = (i == -half || i == half) ? 0.5 : 1.0;
        s0 += w * density_limit(a);
        s2 += w * a * a * density_limit(a);
      }
      mass = s0 * h;
      second = s2 * h;
    }
    check("density-limit-mass", std::abs(mass - 1.0) <= 1e-9,
          "integral " + format_double(mass));
    check("density-limit-second-moment", std::abs(second - 1.0 / 48.0) <= 1e-9,
          "integral " + format_double(second) + " vs 1/48");

    bool ft = true;
    std::string detail = "x in {1,5,10}: residue";
    for (double x : {1.0, 5.0, 10.0}) {
      double s = 0;
      const int half = 3000;
      for (int i = -half; i <= half; ++i) {
        const double a = i * h;
        const double w = (i == -half || i == half) ? 0.5 : 1.0;
        s += w * std::cos(x * a) * density_limit(a);
      }
      const double resid = std::abs(s * h - characteristic_limit(x));
      detail += " " + format_double(resid);
      if (resid > 1e-8) ft = false;
    }
    check("charfn-is-density-transform", ft, detail + " (tol 1e-8)");

    const int ncorr = std::min(std::max(4, max_n_), 20);
    double cmass = 0;
    {
      const double ch = 0.002;
      const int half = 1000;  // |a| <= 2; tail below 3e-11
      double s = 0;
      for (int i = -half; i <= half; ++i) {
        const double a = i * ch;
        const double w = (i == -half || i == half) ? 0.5 : 1.0;
        s += w * density_corrected(a, ncorr).value;
      }
      cmass = s * ch;
    }
    check("density-corrected-mass", std::abs(cmass - 1.0) <= 1e-8,
          "n=" + std::to_string(ncorr) + " integral " + format_double(cmass));
  }

  // --- finite-n characteristic function convergence --------------------
  if (max_n_ >= 20) {
    bool halves = true;
    std::string detail = "x=2: dev(n)/dev(n/2) for n=20";
    const double dev10 = std::abs(characteristic_empirical(dp(10), 2.0) -
                                  characteristic_limit(2.0));
    const double dev20 = std::abs(characteristic_empirical(dp(20), 2.0) -
                                  characteristic_limit(2.0));
    const double ratio = dev20 / dev10;
    detail += " = " + format_double(ratio);
    if (ratio < 0.3 || ratio > 0.7) halves = false;
    check("charfn-empirical-halving", halves, detail + " (expect ~0.5)");
  }

  std::cout << (failures_ == 0 ? "VERIFY OK" : "VERIFY FAILED") << " ("
            << failures_ << " failing checks)\n";
  return failures_ == 0 ? 0 : 2;
}

int cmd_verify(int max_n, int threads) {
  if (max_n < 2) throw usage_error("verify: --max-n must be >= 2");
  Verifier v(max_n, threads);
  return v.run();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact area distributions of closed square-lattice walks,\n"
               "their Harper-operator traces, and the semiclassical limit law."};
  app.require_subcommand(1);

  int n = 0, threads = 0, max_n = 20;
  std::string engine = "dp", kernel = "auto", out, format = "csv";
  double x_max = 20.0, a_max = 0.6, charfn_step = 0.1, density_step = 0.005;

  auto* c_counts = app.add_subcommand("counts", "Exact area histogram of closed n-step walks");
  c_counts->add_option("--n", n, "walk length (even)")->required();
  c_counts->add_option("--engine", engine, "enumerate|dp|spectral (default dp)");
  c_counts->add_option("--kernel", kernel, "enumeration kernel: auto|scalar|avx2");
  c_counts->add_option("--threads", threads, "worker threads (default: env/cores)");
  c_counts->add_option("--out", out, "output file (default stdout)");
  c_counts->add_option("--format", format, "csv|json");

  auto* c_oracle = app.add_subcommand("oracle", "Brute-force 4^n enumeration (n <= 14)");
  c_oracle->add_option("--n", n, "walk length (even)")->required();
  c_oracle->add_option("--kernel", kernel, "auto|scalar|avx2");
  c_oracle->add_option("--threads", threads, "worker threads");
  c_oracle->add_option("--out", out, "output file (default stdout)");
  c_oracle->add_option("--format", format, "csv|json");

  auto* c_charfn = app.add_subcommand("charfn", "Characteristic function of the scaled area");
  c_charfn->add_option("--n", n, "even n for the 1/n-corrected curve (omit for limit only)");
  c_charfn->add_option("--x-max", x_max, "grid end (default 20)");
  c_charfn->add_option("--step", charfn_step, "grid step (default 0.1)");
  c_charfn->add_option("--out", out, "output file (default stdout)");

  auto* c_density = app.add_subcommand("density", "Limit/corrected density of a = A/n");
  c_density->add_option("--n", n, "even n for the 1/n-corrected curve (omit for limit only)");
  c_density->add_option("--a-max", a_max, "grid half-width (default 0.6)");
  c_density->add_option("--step", density_step, "grid step (default 0.005)");
  c_density->add_option("--out", out, "output file (default stdout)");

  auto* c_fig = app.add_subcommand("figure1",
                                   "Emit empirical n=16,18,20 data, limit and corrected "
                                   "curves, and a gnuplot script");
  c_fig->add_option("--out", out, "output directory (default .)");
  c_fig->add_option("--threads", threads,
                    "worker threads (accepted for reproducibility runs; the "
                    "figure pipeline is deterministic at any value)");

  auto* c_verify = app.add_subcommand("verify", "Cross-engine and asymptotics residue battery");
  c_verify->add_option("--max-n", max_n, "cap the n range (default 20)");
  c_verify->add_option("--threads", threads, "worker threads");

  auto* c_cal = app.add_subcommand("calibrate", "Measure the trace phase constant");
  c_cal->add_option("--threads", threads, "worker threads");
  c_cal->add_option("--out", out, "write the probe trace table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (c_counts->parsed()) return cmd_counts(n, engine, kernel, threads, out, format);
    if (c_oracle->parsed()) return cmd_oracle(n, kernel, threads, out, format);
    if (c_charfn->parsed()) return cmd_charfn(n, x_max, charfn_step, out);
    if (c_density->parsed()) return cmd_density(n, a_max, density_step, out);
    if (c_fig->parsed()) return cmd_figure1(out);
    if (c_verify->parsed()) return cmd_verify(max_n, threads);
    if (c_cal->parsed()) return cmd_calibrate(threads, out);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const consistency_error& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 2;
  }
}
