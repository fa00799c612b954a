#pragma once

// Flat `key = value` run configuration. Keys are grouped by prefix:
//   geometry.  capacitor cross-section
//   dist.      defect distribution and sampling
//   field.     coupling calibration
//   solver.    Laplace grid
//   qubit.     qubit background rates and frequency grid
//   defect.    single-defect Lindblad runs
//   peaks.     peak detection
//   run.       seed, readout, files and integration controls
// '#' starts a comment. Unknown keys and malformed values throw ConfigError
// naming the key.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlsbath/analytic.hpp"
#include "tlsbath/field.hpp"
#include "tlsbath/montecarlo.hpp"
#include "tlsbath/spectro.hpp"

namespace tlsbath::config {

struct LindbladRun {
  AngularRate g = mhz(1.0);
  AngularRate gamma1d = per_us(10.0);
  AngularRate gamma_phid = per_us(0.0);
  AngularRate detuning = per_us(0.0);
  double t_end_us = 0.0;      // 0: chosen from the predicted decay time
  double dt_us = 0.0;         // 0: the largest stable step
  double sweep_lo = 0.1;      // Gamma_1D / g
  double sweep_hi = 10.0;
  int sweep_count = 25;
};

struct RunConfig {
  field::GeometrySpec geometry;
  field::GridSpec grid;
  field::CouplingAnchor anchor;
  double screening = 1.0;

  mc::DefectDistribution dist;
  mc::SamplingOptions sampling;

  analytic::QubitRates qubit{per_us(0.025), per_us(0.0)};
  std::optional<std::vector<double>> f_grid;  // start, stop, step (GHz)
  bool purcell = false;
  analytic::PurcellParams purcell_params;

  LindbladRun lindblad;
  spectro::PeakOptions peaks;

  std::optional<std::uint64_t> seed;
  spectro::ReadoutModel readout{0.8, 0.8, 3000};
  std::vector<double> tau_grid{0.1, 150.0, 40.0};  // lo, hi, count
  std::string out_dir = "out";
  std::string field_file;  // default: <out>/field.csv
  std::string bath_file;   // default: <out>/bath.jsonl
  bool edge_model = false;
  bool noiseless = false;

  /// Keys given explicitly, with their raw values.
  std::map<std::string, std::string> entries;

  bool has(const std::string& key) const { return entries.count(key) != 0; }
  /// Throws ConfigError naming the first absent key.
  void require(std::initializer_list<const char*> keys) const;
  /// FNV-1a 64 of the sorted key=value entries, as 16 hex digits.
  std::string hash() const;

  std::string field_path() const;
  std::string bath_path() const;
};

/// Applies one key; throws ConfigError for unknown keys or bad values.
void set(RunConfig& cfg, const std::string& key, const std::string& value);

RunConfig parse(const std::string& text);
RunConfig load(const std::string& path);

/// Names of all recognised keys.
std::vector<std::string> known_keys();

std::uint64_t fnv1a(const std::string& data);

}  // namespace tlsbath::config
