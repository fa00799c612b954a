#pragma once

// Defect bath sampling over the capacitor cross-section.
//
// Defects live in three kinds of region of the cross-section, each extruded
// over the total arm length:
//   substrate-air   gaps, 0 < y < layer
//   metal-air top   over the conductors, 0 < y < layer
//   metal-air edge  a strip of width `layer` beside each etched edge on the gap
//                   side, layer < y < film
// The substrate-metal interface carries no defects.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tlsbath/analytic.hpp"
#include "tlsbath/field.hpp"
#include "tlsbath/rng.hpp"
#include "tlsbath/units.hpp"

namespace tlsbath::mc {

struct DefectDistribution {
  double rho0 = 100.0;       // um^-3 GHz^-1, prefactor of the unnormalised dipole density
  double p_max_debye = 6.0;
  double p_min_debye = 0.06;
  double f_lo_ghz = 5.25;
  double f_hi_ghz = 5.75;

  /// Throws ConfigError naming the offending key.
  void validate() const;
  double bandwidth_ghz() const { return f_hi_ghz - f_lo_ghz; }
  /// Defects per um^3 per GHz over all dipole moments.
  double number_density() const;
};

/// Unnormalised dipole density sqrt(1 - p^2/p_max^2) / p.
double dipole_density(double p_debye, double p_max_debye);
/// Closed-form integral of the density from p to p_max.
double dipole_mass_above(double p_debye, double p_max_debye);

/// Tabulated CDF of the dipole density on [p_min, p_max], log-spaced nodes.
class DipoleTable {
 public:
  explicit DipoleTable(const DefectDistribution& dist, std::size_t nodes = 8192);

  double cdf(double p_debye) const;
  /// Monotone inverse lookup, linear within a node interval.
  double inverse(double u) const;
  std::size_t size() const { return p_.size(); }
  double p_min() const { return p_.front(); }
  double p_max() const { return p_.back(); }

 private:
  std::vector<double> p_, c_;
};

DipoleMoment sample_dipole(rng::Stream& rng, const DipoleTable& table);

enum class Surface { SubstrateAir, MetalAirTop, MetalAirEdge };
std::string to_string(Surface s);
Surface parse_surface(const std::string& s);

enum class Orientation { Scalar, Projection };

/// Axis-aligned rectangle of the cross-section that can host defects.
struct Region {
  double x0, x1, y0, y1;  // nm
  Surface surface;
  double area() const { return (x1 - x0) * (y1 - y0); }
};

struct SamplingOptions {
  double inv_gamma2_lo_ns = 50.0;
  double inv_gamma2_hi_ns = 100.0;
  double split_fraction = 0.5;        // Gamma_1D / 2 = fraction * Gamma_2D
  Orientation orientation = Orientation::Scalar;
  double ground_extent_um = 8.0;      // ground plane included beyond each outer edge
  double subband_ghz = 0.05;          // one RNG stream per sub-band
  int threads = 1;

  void validate() const;
};

/// Host regions for the geometry.
std::vector<Region> layer_regions(const field::GeometrySpec& geometry, const SamplingOptions& options);
/// Total host volume in um^3 (cross-section area times arms * L).
double layer_volume_um3(const field::GeometrySpec& geometry, const SamplingOptions& options);

struct DefectSample {
  field::Point position;   // nm
  double z_um = 0.0;       // coordinate along the extruded arm length
  Surface surface = Surface::SubstrateAir;
  DipoleMoment p;
  double cos_theta = 1.0;  // orientation relative to the local field
  double f_ghz = 0.0;
  analytic::DefectRates rates;
  AngularRate g;

  bool operator==(const DefectSample&) const = default;
};

struct BathRealization {
  std::uint64_t seed = 0;
  std::string config_hash;
  DefectDistribution distribution;
  field::GeometrySpec geometry;
  std::vector<DefectSample> defects;

  std::size_t size() const { return defects.size(); }
};

/// Expected defect count in a sub-band of width df: rho0 M V df, where M is
/// dipole_mass_above(p_min). Poisson-distributed per sub-band, each sub-band drawn from its own
/// stream derived from `seed`. Throws ConfigError if the field source carries a
/// geometry different from `geometry` or does not cover the host regions.
BathRealization sample_bath(const field::GeometrySpec& geometry, const field::FieldSource& field,
                            const DefectDistribution& dist, std::uint64_t seed, const SamplingOptions& options = {});

/// Coupling of a defect with moment p at a point with field E under `orientation`.
AngularRate defect_coupling(DipoleMoment p, double cos_theta, ElectricField e, Orientation orientation);

struct QuadratureOptions {
  double rel_tol = 1e-3;     // refinement stops once successive levels agree this well
  double fail_tol = 0.02;    // final halving change above this throws AccuracyError
  int max_levels = 7;
};

/// Defects per GHz with g > g_min, by nested quadrature of the density over
/// the host regions (the dipole integral is done in closed form).
double count_defects_quadrature(const field::GeometrySpec& geometry, const field::FieldSource& field,
                                const DefectDistribution& dist, AngularRate g_min,
                                const SamplingOptions& options = {}, const QuadratureOptions& quad = {});

/// Sampled defects per GHz with g > g_min.
double count_defects_sampled(const BathRealization& bath, AngularRate g_min);

struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
};

/// Counts of g/2pi (MHz) per bin. Values beyond the outer edges are counted in
/// the first or last bin so the total equals the bath size.
Histogram coupling_histogram(const BathRealization& bath, std::span<const double> edges_mhz);
std::vector<double> log_bins(double lo, double hi, std::size_t count);

/// Counts per `width_nm` section across x, spanning the sampled cross-section.
/// Only defects with g > g_min are counted (g_min = 0 counts all).
Histogram position_histogram(const BathRealization& bath, const SamplingOptions& options, double width_nm = 100.0,
                             AngularRate g_min = AngularRate(0.0));

/// Distance from the defect to the nearest etched edge (nm).
double edge_distance_nm(const DefectSample& d, const field::GeometrySpec& geometry);

/// Decay spectrum of the bath. Throws DomainError if the grid leaves the band.
analytic::DecaySpectrum simulate_decay_spectrum(const BathRealization& bath, const analytic::QubitRates& qubit,
                                                std::span<const double> f_grid);

std::vector<analytic::Defect> as_defects(const BathRealization& bath);

/// JSON lines: a header object, then one defect per line.
void write_bath_jsonl(const BathRealization& bath, const std::string& path);
BathRealization read_bath_jsonl(const std::string& path);

}  // namespace tlsbath::mc
