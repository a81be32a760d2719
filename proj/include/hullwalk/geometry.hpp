#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hullwalk/rng.hpp"

namespace hullwalk::geom {

// kappa_d = pi^{d/2} / Gamma(1 + d/2), volume of the unit ball.
double kappa(int d);
// varpi_d = d * kappa_d, surface measure of the unit sphere.
double varpi(int d);

struct Facet {
  std::vector<int> vertices;   // indices into the polytope vertex list
  std::vector<double> normal;  // unit outward normal
  double offset = 0.0;         // <normal, v> == offset on the facet
};

// Convex body given by its extreme points. Facets are simplicial and present
// only for full-dimensional bodies with dim >= 2; lower-dimensional input is
// kept as a rank-annotated vertex set.
class Polytope {
 public:
  Polytope() = default;
  Polytope(int dim, int rank, std::vector<double> vertices,
           std::vector<Facet> facets)
      : dim_(dim),
        rank_(rank),
        vertices_(std::move(vertices)),
        facets_(std::move(facets)) {}

  int dim() const { return dim_; }
  int degenerate_rank() const { return rank_; }
  bool full_dimensional() const { return rank_ == dim_; }
  std::int64_t vertex_count() const {
    return dim_ == 0 ? 0 : static_cast<std::int64_t>(vertices_.size()) / dim_;
  }
  const double* vertex(std::int64_t i) const {
    return vertices_.data() + i * dim_;
  }
  const std::vector<double>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

 private:
  int dim_ = 0;
  int rank_ = 0;
  std::vector<double> vertices_;  // row-major, vertex_count x dim
  std::vector<Facet> facets_;
};

struct IntrinsicVolumeEstimate {
  enum class Method { Exact, SphereQuadrature, KubotaMC, BoxCoefficient };
  int m = 0;
  double value = 0.0;
  double std_error = 0.0;
  Method method = Method::Exact;
};

struct PointEstimate {
  std::vector<double> value;
  std::vector<double> std_error;
};

// Convex hull of `count` points of dimension `dim` stored row-major.
// Throws std::invalid_argument on empty input ("no points") or non-finite
// coordinates ("invalid coordinate").
Polytope convex_hull(const double* points, std::int64_t count, int dim);
Polytope convex_hull(const std::vector<double>& points, int dim);

// max_{v in P} <direction, v>; direction must be nonzero.
double support_function(const Polytope& p, const double* direction);

// Exact Lebesgue volume (fan triangulation); 0 for degenerate bodies.
double volume(const Polytope& p);

// V_{d-1} = half the total facet measure; 0 for degenerate bodies.
double surface_area_half(const Polytope& p);

// V_1 via the mean width. Exact for d <= 2 and for segments; sphere Monte
// Carlo otherwise with per-direction streams derived from `key`.
IntrinsicVolumeEstimate mean_width_and_v1(const Polytope& p,
                                          std::int64_t num_directions,
                                          StreamKey key);

// Sphere Monte Carlo Steiner point.
PointEstimate steiner_point(const Polytope& p, std::int64_t num_directions,
                            StreamKey key);

// Intrinsic volumes of an axis-aligned box: elementary symmetric polynomials
// of the side lengths, V_0..V_d.
std::vector<double> box_intrinsic_volumes(const std::vector<double>& sides);

// Kubota projection estimator for V_m, 1 <= m <= d; m == d short-circuits to
// the exact volume.
IntrinsicVolumeEstimate kubota_vm(const Polytope& p, int m,
                                  std::int64_t num_rotations, StreamKey key);

// Distance from a point to the body (support-based min-norm descent).
double distance_to(const Polytope& p, const double* x);

double hausdorff_distance(const Polytope& p, const Polytope& q);

// Steiner formula check: Monte Carlo volume of P + rho*B^d against the
// polynomial expansion. Returns (lhs, rhs).
std::pair<double, double> steiner_polynomial_check(const Polytope& p,
                                                   double rho,
                                                   std::int64_t mc_points,
                                                   StreamKey key);

// True when V_m of a full-dimensional body in R^d has an exact routine here
// (volume, half surface area, and the d = 2 mean-width branch).
bool has_exact_vm(int d, int m);

enum class VmMethod { Auto, Exact, Sphere, Kubota };

struct McControls {
  std::int64_t sphere_directions = 4096;
  std::int64_t rotations = 1024;
};

// Dispatches V_m evaluation: exact branch when available (or requested),
// otherwise sphere quadrature (m = 1) or Kubota projections.
IntrinsicVolumeEstimate intrinsic_volume(const Polytope& p, int m,
                                         VmMethod method,
                                         const McControls& controls,
                                         StreamKey key);

// Plain text serialization: "d n_vertices" header then one vertex per line.
void write_polytope(std::ostream& os, const Polytope& p);
Polytope read_polytope(std::istream& is);
std::string to_text(const Polytope& p);
Polytope from_text(const std::string& text);

}  // namespace hullwalk::geom
