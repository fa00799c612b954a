#pragma once

#include <span>
#include <string>
#include <vector>

#include "tlsbath/units.hpp"

namespace tlsbath::analytic {

struct DefectRates {
  AngularRate gamma1;
  AngularRate gamma_phi;

  /// Gamma_2D = Gamma_1D / 2 + Gamma_phiD
  AngularRate gamma2() const { return AngularRate(0.5 * gamma1.value + gamma_phi.value); }
  bool operator==(const DefectRates&) const = default;
};

/// Splits a total decoherence rate Gamma_2D so that Gamma_1D/2 = fraction * Gamma_2D
/// and Gamma_phiD = (1 - fraction) * Gamma_2D.
DefectRates split_gamma2(AngularRate gamma2, double fraction = 0.5);

struct QubitRates {
  AngularRate gamma1;
  AngularRate gamma_phi;
};

/// Gamma = Gamma_1D/2 + Gamma_phiD + Gamma_1Q/2 + Gamma_phiQ
AngularRate total_gamma(const QubitRates& qubit, const DefectRates& defect);

/// Gamma_1 = 2 g^2 Gamma / (Gamma^2 + Delta^2) + Gamma_1Q. Gamma <= 0 throws DomainError.
AngularRate lorentzian_decay_rate(AngularRate g, AngularRate delta, AngularRate gamma, AngularRate gamma1q);

/// Advisory: Gamma_1D > g > Gamma_1Q, where the Lorentzian form is derived.
bool in_incoherent_regime(AngularRate g, AngularRate gamma1d, AngularRate gamma1q);

/// One defect as seen by the qubit spectrum.
struct Defect {
  double f0_ghz = 0.0;
  AngularRate g;
  DefectRates rates;
};

/// One Lorentzian term parameterised directly by its width Gamma.
struct LorentzianPeak {
  double f0_ghz = 0.0;
  AngularRate g;
  AngularRate gamma;
};

enum class Provenance { Analytic, MonteCarlo, Fitted, Extracted };
std::string to_string(Provenance p);

/// Gamma_1 on a frequency grid. Missing points carry NaN.
struct DecaySpectrum {
  std::vector<double> f_ghz;
  std::vector<double> gamma1;    // 1/us
  std::vector<double> residual;  // per-point fit residual, 0 when not fitted
  std::vector<Provenance> provenance;

  std::size_t size() const { return f_ghz.size(); }
  bool missing(std::size_t i) const;
  std::size_t missing_count() const;
};

DecaySpectrum spectrum_from_defects(std::span<const Defect> defects, const QubitRates& qubit,
                                    std::span<const double> f_grid, Provenance tag = Provenance::Analytic);

DecaySpectrum spectrum_from_peaks(std::span<const LorentzianPeak> peaks, AngularRate background,
                                  std::span<const double> f_grid, Provenance tag = Provenance::Fitted);

/// Evenly spaced grid [start, stop] with the given step, inclusive of stop
/// when it lands on the grid within 1e-9 steps.
std::vector<double> frequency_grid(double start_ghz, double stop_ghz, double step_ghz);

/// Dispersive Purcell rate kappa g_res^2 / Delta_res^2, Delta_res = 2 pi (f - f_res).
/// |Delta_res| < kappa throws DomainError.
AngularRate purcell_rate(double f_ghz, double f_res_ghz, AngularRate g_res, AngularRate kappa);

struct PurcellParams {
  double f_res_ghz = 6.5;
  AngularRate g_res = mhz(40.0);
  double loaded_q = 1e4;

  AngularRate kappa() const { return AngularRate(ghz(f_res_ghz).value / loaded_q); }
};

/// Adds the Purcell background to every non-missing point.
void add_purcell(DecaySpectrum& spectrum, const PurcellParams& params);

/// Gaussian pi-pulse envelope truncated to [0, duration].
struct GaussianPulse {
  double duration_ns = 20.0;
  double sigma_ns = 4.0;  // duration / 5
  double center_ns = 10.0;
};

/// Excited population after the pulse is cut at t_cut:
/// theta = pi * (area up to t_cut) / (total area), P = sin^2(theta / 2).
double truncated_gaussian_population(double t_cut_ns, const GaussianPulse& pulse = {});

/// CSV columns f_GHz, gamma1_per_us, t1_us.
void write_spectrum_csv(const DecaySpectrum& spectrum, const std::string& path,
                        std::span<const std::string> comments = {});

}  // namespace tlsbath::analytic
