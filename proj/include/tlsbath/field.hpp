#pragma once

// Electric field around the capacitor cross-section.
//
// Cross-section coordinates are in nm: x runs across the arm with the centre
// conductor at |x| < S/2, gaps at S/2 < |x| < S/2 + W and ground planes beyond;
// y is height with the substrate surface at y = 0 (substrate below). Metal
// films are represented as zero-thickness sheets at y = 0. The surface layer
// occupies 0 < y < layer over both metal and exposed substrate; etched-edge
// defects sit in a strip of width `layer` beside each edge, up to the film
// thickness.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlsbath/units.hpp"

namespace tlsbath::field {

struct Point {
  double x = 0.0;  // nm
  double y = 0.0;  // nm
  bool operator==(const Point&) const = default;
};

struct GeometrySpec {
  double S_um = 8.0;
  double W_um = 8.0;
  double L_um = 165.0;
  double film_nm = 100.0;
  double layer_nm = 3.0;
  double eps_r = 10.0;            // surface layer
  double substrate_eps = 10.0;    // sapphire
  int arms = 4;

  /// Throws ConfigError naming the first nonpositive parameter.
  void validate() const;

  /// Edge x-positions in nm, ascending: -(S/2+W), -S/2, S/2, S/2+W.
  std::array<double, 4> edges_nm() const;
  /// Total extruded edge-parallel length, arms * L, in um.
  double total_length_um() const { return arms * L_um; }

  bool operator==(const GeometrySpec&) const = default;
};

/// E = screening * B / sqrt(x), B in V m^-1 nm^1/2.
struct EdgeFieldModel {
  double B = 0.0;
  double screening = 1.0;
};

/// Throws DomainError for x <= 0.
ElectricField edge_field(double x_nm, const EdgeFieldModel& model);

struct CouplingAnchor {
  double g_mhz = 0.1;    // g / 2 pi
  double p_debye = 1.0;
  double x_nm = 3.0;
};

/// B such that a dipole p at distance x couples with g (screening = 1).
EdgeFieldModel calibrate_edge_model(const CouplingAnchor& anchor = {});

/// Minimum distance at which fields are evaluated near an edge.
inline constexpr double kEdgeClampNm = 0.5;

// ---------------------------------------------------------------------------
// Finite-volume Laplace solver

struct GridSpec {
  double near_nm = 1.0;          // spacing within fine_zone_nm of an edge
  // Closer in, spacing shrinks in proportion to the distance from the edge
  // down to near_nm / edge_ratio at the edge itself.
  double edge_ratio = 8.0;
  double far_nm = 2000.0;        // coarsest spacing
  double half_width_um = 50.0;   // domain is [-half_width, half_width] in x and y
  double fine_zone_nm = 100.0;
  double growth = 0.15;          // spacing grows by this much per nm beyond the fine zone
  double residual_target = 1e-8;
  int max_refinements = 20;
  // Include the surface layer as its own dielectric slab. Off by default: the
  // layer permittivity enters through the screening scalar instead.
  bool resolve_layer = false;

  void validate() const;
};

/// Horizontal conducting sheet at height y spanning [x0, x1].
struct Sheet {
  double x0 = 0.0, x1 = 0.0, y = 0.0;
  double volts = 0.0;
};

/// Horizontal dielectric slab; space outside all slabs has eps = 1.
struct Slab {
  double y0 = 0.0, y1 = 0.0;
  double eps = 1.0;
};

/// A general 2-D electrostatics problem on a tensor grid. Outer boundaries are
/// Neumann (zero normal field).
struct Problem {
  std::vector<double> xs, ys;   // node coordinates, strictly increasing (nm)
  std::vector<Sheet> sheets;
  std::vector<Slab> slabs;
  std::vector<Point> edges;     // singular points, for clamping
};

class FieldMap;
FieldMap read_field_csv(const std::string& path);

/// Node-based |E| on a tensor grid, with bilinear interpolation. Grid
/// coordinates in nm, |E| in V/m. At a dielectric interface the node value is
/// taken from the lower medium; on a conducting sheet from the side above.
class FieldMap {
 public:
  FieldMap() = default;
  FieldMap(std::vector<double> xs, std::vector<double> ys, std::vector<double> emag,
           std::vector<double> potential, std::vector<Sheet> sheets, std::vector<Point> edges);

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  std::size_t nx() const { return xs_.size(); }
  std::size_t ny() const { return ys_.size(); }

  double emag(std::size_t i, std::size_t j) const { return emag_[j * nx() + i]; }
  double potential(std::size_t i, std::size_t j) const { return potential_[j * nx() + i]; }
  bool has_potential() const { return !potential_.empty(); }

  /// Bilinear |E| at p. Positions closer than kEdgeClampNm to an edge are moved
  /// out to that distance. Throws DomainError outside the grid or on a sheet.
  ElectricField at(Point p) const;

  bool contains(Point p) const;
  bool on_conductor(Point p) const;
  /// Distance to the nearest singular edge point (nm).
  double edge_distance(Point p) const;

  /// Multiplies every |E| by k (potential untouched); the cumulative factor is kept.
  void rescale(double k);
  double scale() const { return scale_; }

  double residual = 0.0;
  std::string grid_schedule;
  std::optional<GeometrySpec> geometry;

  const std::vector<Sheet>& sheets() const { return sheets_; }
  const std::vector<Point>& edges() const { return edges_; }

 private:
  friend FieldMap read_field_csv(const std::string& path);

  std::vector<double> xs_, ys_, emag_, potential_;
  std::vector<Sheet> sheets_;
  std::vector<Point> edges_;
  double scale_ = 1.0;
};

/// Solves div(eps grad phi) = 0 with sheets held at their potentials. Iterates
/// (factorisation plus refinement) until the relative residual is below
/// `residual_target`; otherwise throws SolverError with the final residual.
FieldMap solve(const Problem& problem, double residual_target = 1e-8, int max_refinements = 20);

/// Graded 1-D axis on [lo, hi] passing through every `lines` entry, with
/// spacing <= near within fine_zone of each `focus` point, growing linearly in
/// distance outside it and capped at far.
std::vector<double> graded_axis(double lo, double hi, std::vector<double> lines, std::span<const double> focus,
                                const GridSpec& grid);

struct Boundary {
  double center_volts = 1.0;
  double ground_volts = 0.0;
};

/// Builds the CPW cross-section problem for the geometry.
Problem cpw_problem(const GeometrySpec& geometry, const GridSpec& grid, const Boundary& boundary = {});

FieldMap solve_laplace(const GeometrySpec& geometry, const GridSpec& grid = {}, const Boundary& boundary = {});

/// Rescales the map so that the field `anchor.x_nm` from the centre conductor's
/// right edge, along the substrate surface, equals the calibrated edge model.
/// Returns the applied factor.
double calibrate_map(FieldMap& map, const EdgeFieldModel& model, double anchor_x_nm = 3.0);

/// Log-log slope of |E| against distance from the centre conductor's right edge
/// along the substrate surface, for `count` log-spaced probes in [x_lo, x_hi].
double edge_exponent(const FieldMap& map, double x_lo_nm = 2.0, double x_hi_nm = 50.0, int count = 16);

/// CSV (x_nm, y_nm, E_V_per_m); geometry and calibration go in '#' comments.
void write_field_csv(const FieldMap& map, const std::string& path);
FieldMap read_field_csv(const std::string& path);

// ---------------------------------------------------------------------------

/// Field evaluation used by the sampler: either a solved map or the analytic
/// edge model applied to the distance from the nearest edge.
class FieldSource {
 public:
  /// `map` must outlive the source. |E| is multiplied by `screening`.
  static FieldSource from_map(const FieldMap& map, double screening = 1.0);
  static FieldSource from_edge_model(const GeometrySpec& geometry, const EdgeFieldModel& model);

  ElectricField at(Point p) const;
  const std::optional<GeometrySpec>& geometry() const { return geometry_; }
  bool is_map() const { return map_ != nullptr; }

 private:
  const FieldMap* map_ = nullptr;
  EdgeFieldModel model_;
  std::optional<GeometrySpec> geometry_;
  std::array<double, 4> edges_{};
};

}  // namespace tlsbath::field
