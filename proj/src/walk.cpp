#include "hullwalk/walk.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hullwalk/linalg.hpp"

namespace hullwalk::walk {

WalkPath generate_walk(const stable::StableLawSpec& spec, std::int64_t n,
                       StreamKey key) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const stable::StepSampler sampler(spec);
  const int d = spec.dim;
  WalkPath path;
  path.dim = d;
  path.n = n;
  path.seed = key.seed;
  path.stream = key.stream;
  path.points.assign(static_cast<std::size_t>(n + 1) * d, 0.0);
  Rng rng(key);
  double step[64];
  for (std::int64_t k = 1; k <= n; ++k) {
    sampler(rng, step);
    const double* prev = path.points.data() + (k - 1) * d;
    double* cur = path.points.data() + k * d;
    for (int j = 0; j < d; ++j) cur[j] = prev[j] + step[j];
  }
  return path;
}

std::vector<double> center_scale(const WalkPath& path,
                                 const stable::NormalizationPlan& plan) {
  const int d = path.dim;
  const double bn = plan.b(path.n > 0 ? path.n : 1);
  std::vector<double> out(path.points.size());
  for (std::int64_t k = 0; k <= path.n; ++k) {
    const std::vector<double> ak = plan.a(k);
    for (int j = 0; j < d; ++j) {
      const double a = j < static_cast<int>(ak.size()) ? ak[j] : 0.0;
      out[k * d + j] = (path.points[k * d + j] - a) / bn;
    }
  }
  return out;
}

void DriftFrame::to_frame(const double* x, double* out) const {
  for (int k = 0; k < dim; ++k)
    out[k] = lin::dot(basis.data() + static_cast<std::size_t>(k) * dim, x, dim);
}

DriftFrame drift_frame(const std::vector<double>& mu) {
  const int d = static_cast<int>(mu.size());
  const double mn = lin::norm(mu.data(), d);
  if (d < 1 || mn == 0.0) throw std::invalid_argument("mu must be nonzero");

  DriftFrame frame;
  frame.dim = d;
  frame.mu = mu;
  frame.basis.assign(static_cast<std::size_t>(d) * d, 0.0);
  for (int j = 0; j < d; ++j) frame.basis[j] = mu[j] / mn;

  // Complete with standard vectors, skipping the one most parallel to mu
  // (lowest index on ties).
  int skip = 0;
  double best = std::fabs(mu[0]);
  for (int j = 1; j < d; ++j)
    if (std::fabs(mu[j]) > best) {
      best = std::fabs(mu[j]);
      skip = j;
    }
  int row = 1;
  std::vector<double> w(d);
  for (int j = 0; j < d && row < d; ++j) {
    if (j == skip) continue;
    for (int i = 0; i < d; ++i) w[i] = (i == j) ? 1.0 : 0.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < row; ++k) {
        const double* bk = frame.basis.data() + static_cast<std::size_t>(k) * d;
        const double c = lin::dot(w.data(), bk, d);
        for (int i = 0; i < d; ++i) w[i] -= c * bk[i];
      }
    }
    const double rn = lin::norm(w.data(), d);
    if (rn < 1e-12) continue;
    double* br = frame.basis.data() + static_cast<std::size_t>(row) * d;
    for (int i = 0; i < d; ++i) br[i] = w[i] / rn;
    // Sign convention: first nonzero coordinate positive.
    for (int i = 0; i < d; ++i) {
      if (std::fabs(br[i]) > 1e-12) {
        if (br[i] < 0.0)
          for (int t = 0; t < d; ++t) br[t] = -br[t];
        break;
      }
    }
    ++row;
  }
  if (row != d) throw std::runtime_error("drift frame completion failed");
  return frame;
}

std::vector<double> apply_psi_n(const WalkPath& path, const DriftFrame& frame,
                                std::int64_t n, double alpha) {
  if (!(alpha > 1.0))
    throw std::invalid_argument("psi_n requires alpha > 1");
  if (frame.dim != path.dim) throw std::invalid_argument("frame/path mismatch");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int d = path.dim;
  const double bn = std::pow(static_cast<double>(n), 1.0 / alpha);
  std::vector<double> out(path.points.size());
  std::vector<double> f(d);
  for (std::int64_t k = 0; k <= path.n; ++k) {
    frame.to_frame(path.point(k), f.data());
    out[k * d] = f[0] / static_cast<double>(n);
    for (int j = 1; j < d; ++j) out[k * d + j] = f[j] / bn;
  }
  return out;
}

std::vector<std::pair<double, double>> bounding_box_in_frame(
    const WalkPath& path, const DriftFrame& frame) {
  if (frame.dim != path.dim) throw std::invalid_argument("frame/path mismatch");
  const int d = path.dim;
  std::vector<std::pair<double, double>> box(
      d, {std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()});
  std::vector<double> f(d);
  for (std::int64_t k = 0; k <= path.n; ++k) {
    frame.to_frame(path.point(k), f.data());
    for (int j = 0; j < d; ++j) {
      box[j].first = std::min(box[j].first, f[j]);
      box[j].second = std::max(box[j].second, f[j]);
    }
  }
  return box;
}

}  // namespace hullwalk::walk
