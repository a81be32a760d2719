#include "hullwalk/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "hullwalk/geometry.hpp"
#include "hullwalk/parallel.hpp"

namespace hullwalk::lim {

namespace {
constexpr double kPi = 3.14159265358979323846;

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

double gamma_fn(double x) { return std::tgamma(x); }

double gamma_ratio_constant(double alpha, int m) {
  if (!(alpha > 1.0) || alpha > 2.0)
    throw std::invalid_argument("alpha must be in (1, 2]");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return alpha * std::pow(gamma_fn(1.0 / alpha), m) /
         (m * gamma_fn(m / alpha));
}

double bm_expected_vm(int d, int m) {
  if (m < 1 || m > d) throw std::invalid_argument("m must be in [1, d]");
  return binom(d, m) * std::pow(kPi / 2.0, m / 2.0) *
         gamma_fn((d - m) / 2.0 + 1.0) /
         (gamma_fn(m / 2.0 + 1.0) * gamma_fn(d / 2.0 + 1.0));
}

double rotinv_expected_vm(double alpha, double gamma, int d, int m) {
  if (!(alpha > 1.0) || alpha >= 2.0)
    throw std::invalid_argument("alpha must be in (1, 2)");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (m < 1 || m > d) throw std::invalid_argument("m must be in [1, d]");
  const double prefactor = binom(d, m) * geom::kappa(d) / geom::kappa(d - m);
  const double core = alpha * std::pow(gamma_fn(1.0 / alpha), m) *
                      std::pow(gamma_fn(1.0 - 1.0 / alpha), m) /
                      (m * std::pow(kPi, m) * gamma_fn(m / alpha));
  return prefactor * core * std::pow(gamma, m / alpha);
}

double timespace_volume_constant(int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  return std::pow(2.0, (d + 1) / 2.0) * std::pow(kPi, (d - 1) / 2.0) /
         factorial(d + 1);
}

double chi_sqrt_moment(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return std::sqrt(2.0) * gamma_fn((k + 1) / 2.0) / gamma_fn(k / 2.0);
}

double dirichlet_limit(int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return std::pow(kPi, d / 2.0) / gamma_fn(d / 2.0);
}

std::vector<double> convolve(const std::vector<double>& x,
                             const std::vector<double>& y, std::int64_t n) {
  std::vector<double> out(n + 1, 0.0);
  const std::int64_t nx = static_cast<std::int64_t>(x.size());
  const std::int64_t ny = static_cast<std::int64_t>(y.size());
  par::for_index(n + 1, [&](std::int64_t k) {
    const std::int64_t lo = std::max<std::int64_t>(0, k - (ny - 1));
    const std::int64_t hi = std::min<std::int64_t>(k, nx - 1);
    double s = 0.0;
    for (std::int64_t i = lo; i <= hi; ++i) s += x[i] * y[k - i];
    out[k] = s;
  });
  return out;
}

double sequence_convolution_limit(double alpha, int m, std::int64_t n) {
  if (!(alpha > 1.0) || alpha > 2.0)
    throw std::invalid_argument("alpha must be in (1, 2]");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < m) throw std::invalid_argument("n must be >= m");
  const double s = 1.0 / alpha;
  std::vector<double> a(n + 1, 0.0);
  for (std::int64_t k = 1; k <= n; ++k)
    a[k] = std::pow(static_cast<double>(k), s - 1.0);
  std::vector<double> cur = a;
  for (int j = 1; j < m; ++j) cur = convolve(cur, a, n);
  double total = 0.0;
  for (std::int64_t k = m; k <= n; ++k) total += cur[k];
  return total / std::pow(static_cast<double>(n), m * s);
}

stable::McEstimate v1_stable_limit(const stable::StableLawSpec& spec,
                                   std::int64_t mc_samples, StreamKey key) {
  if (!(spec.alpha > 1.0))
    throw std::invalid_argument("first moment infinite");
  if (spec.has_drift())
    throw std::invalid_argument("v1_stable_limit requires mu = 0");
  stable::McEstimate est = stable::expected_norm_x1(spec, mc_samples, key);
  est.mean *= spec.alpha;
  est.std_error *= spec.alpha;
  return est;
}

DriftLimits drift_limits(const std::vector<double>& mu,
                         std::optional<double> sigma_perp_det, int d) {
  double norm2 = 0.0;
  for (double v : mu) norm2 += v * v;
  if (norm2 == 0.0) throw std::invalid_argument("mu must be nonzero");
  DriftLimits out;
  out.v1 = std::sqrt(norm2);
  out.steiner.assign(mu.begin(), mu.end());
  for (auto& v : out.steiner) v *= 0.5;
  if (sigma_perp_det) {
    if (*sigma_perp_det < 0.0)
      throw std::invalid_argument("det Sigma_perp must be >= 0");
    out.vd = out.v1 * std::sqrt(*sigma_perp_det) * timespace_volume_constant(d);
  }
  return out;
}

double variance_upper_bound(std::int64_t n, double second_central_moment) {
  if (n < 0 || second_central_moment < 0.0)
    throw std::invalid_argument("inputs must be >= 0");
  return static_cast<double>(n) * second_central_moment;
}

}  // namespace hullwalk::lim
