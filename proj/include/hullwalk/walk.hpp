#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hullwalk/rng.hpp"
#include "hullwalk/stable.hpp"

namespace hullwalk::walk {

// S(0..n) with S(0) = 0; rows of `points` are positions, reproducible from
// (seed, stream).
struct WalkPath {
  int dim = 0;
  std::int64_t n = 0;
  std::vector<double> points;  // (n+1) x dim
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  const double* point(std::int64_t k) const { return points.data() + k * dim; }
};

WalkPath generate_walk(const stable::StableLawSpec& spec, std::int64_t n,
                       StreamKey key);

// (S(k) - a_k) / b_n for k = 0..n.
std::vector<double> center_scale(const WalkPath& path,
                                 const stable::NormalizationPlan& plan);

// Orthonormal frame with the first axis along the drift; rows of `basis` are
// the frame vectors, so basis * x gives frame coordinates.
struct DriftFrame {
  int dim = 0;
  std::vector<double> mu;
  std::vector<double> basis;  // d x d, row k = e-bar_k

  void to_frame(const double* x, double* out) const;
};

DriftFrame drift_frame(const std::vector<double>& mu);

// psi_n in frame coordinates: first frame coordinate divided by n, the rest
// by b_n = n^{1/alpha}. Requires alpha > 1 and a drift frame.
std::vector<double> apply_psi_n(const WalkPath& path, const DriftFrame& frame,
                                std::int64_t n, double alpha);

// Per frame axis (min_k <S(k), e-bar_i>, max_k <S(k), e-bar_i>).
std::vector<std::pair<double, double>> bounding_box_in_frame(
    const WalkPath& path, const DriftFrame& frame);

}  // namespace hullwalk::walk
