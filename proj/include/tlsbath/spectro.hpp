#pragma once

// Swap-spectroscopy synthesis and analysis: decay spectrum -> P(f, tau) map,
// map -> Gamma_1(f), and Lorentzian peak fitting of Gamma_1(f).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tlsbath/analytic.hpp"
#include "tlsbath/units.hpp"

namespace tlsbath::spectro {

/// P_observed = f1 P + (1 - f0)(1 - P). shots == 0 means no shot noise.
struct ReadoutModel {
  double f0 = 0.8;   // ground-state fidelity
  double f1 = 0.8;   // excited-state fidelity
  std::uint64_t shots = 0;

  /// Throws DomainError unless both fidelities lie in (0.5, 1].
  void validate() const;
  double compress(double p) const { return f1 * p + (1.0 - f0) * (1.0 - p); }
  double invert(double p_obs) const { return (p_obs - (1.0 - f0)) / (f1 + f0 - 1.0); }
};

/// Observed excited-state probability on an (f, tau) grid; p[i * tau.size() + j].
struct SwapMap {
  std::vector<double> f_ghz;
  std::vector<double> tau_us;
  std::vector<double> p;
  ReadoutModel readout;

  double at(std::size_t i, std::size_t j) const { return p[i * tau_us.size() + j]; }
  /// One-sigma uncertainty of the readout-corrected probability at (i, j); 0 without shot noise.
  double sigma(std::size_t i, std::size_t j) const;
};

/// `count` log-spaced points over [lo, hi].
std::vector<double> log_tau_grid(double lo_us = 0.1, double hi_us = 150.0, std::size_t count = 40);

/// P = exp(-Gamma_1 tau), compressed by the readout model, then binomially
/// sampled when shots > 0. Missing spectrum points give NaN columns.
SwapMap synth_swap_map(const analytic::DecaySpectrum& spectrum, std::span<const double> tau_us,
                       const ReadoutModel& readout, std::uint64_t seed = 0);

/// Per-column weighted fit of log P after undoing the readout compression.
/// Points below max(3 sigma, 1e-6) are dropped; columns left with fewer than 8
/// points or whose fit fails are marked missing (NaN). With shot noise the fit
/// is repeated with sigma, the cut and a log-bias correction taken from the
/// previous fit.
analytic::DecaySpectrum extract_gamma_map(const SwapMap& map);

struct PeakOptions {
  AngularRate min_prominence = per_us(0.05);
  double min_separation_mhz = 10.0;
  std::size_t median_window = 25;
};

/// Rolling median over `window` points centred on each index, ignoring missing points.
std::vector<double> rolling_median(std::span<const double> values, std::size_t window);

/// Local maxima rising at least min_prominence above the rolling median,
/// greedily thinned so no two lie within min_separation (higher wins, ties
/// to lower frequency). Returned ascending in frequency. Throws DomainError
/// when min_separation spans fewer than 3 grid steps.
std::vector<double> detect_peaks(const analytic::DecaySpectrum& spectrum, const PeakOptions& options = {});

struct FittedPeak {
  analytic::LorentzianPeak peak;
  double f0_err_ghz = 0.0;
  AngularRate g_err;
  AngularRate gamma_err;

  /// 1 / (Gamma - background / 2) in ns: Gamma_2D when qubit dephasing is negligible.
  double inv_gamma2d_ns(AngularRate background) const;
};

struct PeakFitResult {
  std::vector<FittedPeak> peaks;  // ascending f0
  AngularRate background;
  AngularRate background_err;
  double rms_residual = 0.0;      // RMS relative residual at the solution
  double initial_rms = 0.0;       // same, at the initial guess
  bool converged = false;
  int iterations = 0;
};

struct FitOptions {
  double rel_cost_tol = 1e-9;
  int max_iterations = 200;
};

/// Joint Levenberg-Marquardt fit of background + sum of Lorentzians to the
/// non-missing points, in relative residuals. g, Gamma and the background are
/// fitted as logarithms; each centre is confined to its seed +- 3 initial
/// half-widths through a tanh map. Each seed needs >= 5 points within 3 Gamma_init,
/// else InsufficientDataError.
PeakFitResult fit_lorentzians(const analytic::DecaySpectrum& spectrum, std::span<const double> seeds_ghz,
                              const FitOptions& options = {});

analytic::DecaySpectrum model_spectrum(const PeakFitResult& fit, std::span<const double> f_grid);

/// Long-form CSV: f_GHz, tau_us, P, with readout settings in '#' comments.
void write_swap_map_csv(const SwapMap& map, const std::string& path, std::span<const std::string> comments = {});
SwapMap read_swap_map_csv(const std::string& path);

void write_peak_fit_json(const PeakFitResult& fit, const std::string& path, const std::string& config_hash = "");

}  // namespace tlsbath::spectro
