#pragma once

// Lindblad dynamics of a qubit coupled to one two-level defect.
//
// Basis ordering is |defect qubit>: index 0 = |00>, 1 = |01> (qubit excited),
// 2 = |10> (defect excited), 3 = |11>. The reduced system keeps the first
// three states only.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlsbath/units.hpp"

namespace tlsbath::lindblad {

using Complex = std::complex<double>;
/// At most 4x4; storage is inline so stepping never allocates.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-10), unit trace (1e-9) and eigenvalues >= -1e-8.
  /// Throws DomainError otherwise.
  static DensityMatrix from_matrix(const Matrix& m);
  /// Pure state |k><k| in a space of dimension dim.
  static DensityMatrix basis_state(int dim, int k);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  Complex trace() const { return m_.trace(); }
  double min_eigenvalue() const;
  double hermiticity_error() const;

 private:
  friend class Integrator;
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

struct QubitParams {
  AngularRate omega;      // transition frequency (lab frame only)
  AngularRate gamma1;     // background energy relaxation
  AngularRate gamma_phi;  // pure dephasing
};

struct DefectParams {
  AngularRate omega;
  AngularRate gamma1;
  AngularRate gamma_phi;
};

/// Delta = omega_D - omega_Q.
inline AngularRate detuning(const QubitParams& q, const DefectParams& d) { return d.omega - q.omega; }

class LindbladSystem {
 public:
  /// Throws DomainError on dimension mismatch or non-Hermitian H (1e-12).
  LindbladSystem(Matrix hamiltonian, std::vector<Matrix> collapse_ops);

  int dim() const { return static_cast<int>(h_.rows()); }
  const Matrix& hamiltonian() const { return h_; }
  const std::vector<Matrix>& collapse_ops() const { return c_; }

  /// d rho / dt = -i[H, rho] + sum_i D[C_i] rho
  Matrix rhs(const Matrix& rho) const;

  /// Largest rate or frequency scale: max(|eig H|, ||sum C^+C||).
  double max_rate() const { return max_rate_; }
  /// The largest step evolve() accepts, 1 / (50 max_rate).
  double max_step() const;

 private:
  Matrix h_;
  std::vector<Matrix> c_;
  Matrix h_eff_;  // H - i/2 sum C^+ C
  double max_rate_ = 0.0;
};

/// Lab-frame 4-level system with the four collapse operators
/// {a sqrt(G1Q), a^+a sqrt(2 GphiQ), b sqrt(G1D), b^+b sqrt(2 GphiD)}.
LindbladSystem build_full_system(const QubitParams& qubit, const DefectParams& defect, AngularRate g);

/// Interaction-picture single-excitation system on {|00>, |01>, |10>} with
/// H = [[0,0,0],[0,0,g],[0,g,Delta]].
LindbladSystem build_reduced_system(const QubitParams& qubit, const DefectParams& defect, AngularRate g,
                                    AngularRate delta);

struct Trajectory {
  std::vector<double> times;  // us
  std::vector<DensityMatrix> states;
};

/// Fixed-step RK4 integration from t = 0 to t_end. States are recorded every
/// `stride` steps (and always at the final step). Invariants are monitored
/// every step; a trace drift or negativity beyond 1e-6 throws InstabilityError.
Trajectory evolve(const LindbladSystem& system, const DensityMatrix& rho0, double t_end, double dt,
                  int stride = 1);

enum class Subsystem { Qubit, Defect };

struct Sample {
  double t;
  double p;
};
using Series = std::vector<Sample>;

Series excited_population(const Trajectory& traj, Subsystem which);

struct DecayFit {
  AngularRate gamma1;
  double residual = 0.0;   // RMS of log residuals
  double intercept = 0.0;  // fitted log P at t = 0
  std::size_t points = 0;
};

/// Least-squares fit of log P vs t. Without a window, uses
/// [0.1 T_est, 2 T_est] with T_est the first 1/e crossing (or the full series
/// if P never crosses). Optional weights apply to the log residuals.
DecayFit extract_decay_rate(std::span<const Sample> series,
                            std::optional<std::pair<double, double>> window = std::nullopt,
                            std::span<const double> weights = {});

/// First time P drops below `level`, if ever.
std::optional<double> first_crossing(std::span<const Sample> series, double level);
/// Earliest time after which P stays below `level`.
std::optional<double> settling_time(std::span<const Sample> series, double level);
/// Number of strict local extrema whose height differs from both neighbours'
/// extrema by more than `min_swing`.
int count_extrema(std::span<const Sample> series, double min_swing = 1e-6);

/// CSV: t_us, then Re/Im of each element in row-major order.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

}  // namespace tlsbath::lindblad
