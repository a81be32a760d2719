#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hullwalk/rng.hpp"
#include "hullwalk/stable.hpp"

// Closed-form limit constants and the analytic sub-results the estimators
// are checked against. All gamma evaluations route through gamma_fn.
namespace hullwalk::lim {

double gamma_fn(double x);

// alpha * Gamma(1/alpha)^m / (m * Gamma(m/alpha)); alpha in (1,2], m >= 1.
double gamma_ratio_constant(double alpha, int m);

// Expected V_m of the Brownian path hull:
// C(d,m) (pi/2)^{m/2} Gamma((d-m)/2+1) / (Gamma(m/2+1) Gamma(d/2+1)).
double bm_expected_vm(int d, int m);

// Expected V_m of the rotationally invariant alpha-stable path hull,
// cf exp(-gamma |xi|^alpha), alpha in (1,2).
double rotinv_expected_vm(double alpha, double gamma, int d, int m);

// Expected volume of the time-space Brownian hull:
// 2^{(d+1)/2} pi^{(d-1)/2} / (d+1)!.
double timespace_volume_constant(int d);

// E[sqrt(chi^2(k))] = sqrt(2) Gamma((k+1)/2) / Gamma(k/2).
double chi_sqrt_moment(int k);

// pi^{d/2} / Gamma(d/2).
double dirichlet_limit(int d);

// Full convolution (x*y)_k for k = 0..n; exposed for the tests.
std::vector<double> convolve(const std::vector<double>& x,
                             const std::vector<double>& y, std::int64_t n);

// (1/b_n^m) sum_{k=m}^n a*^m_k with a_k = k^{1/alpha - 1}; converges to
// gamma_ratio_constant(alpha, m). Exact O(m n^2) dynamic program.
double sequence_convolution_limit(double alpha, int m, std::int64_t n);

// alpha * E||X(1)|| by Monte Carlo; requires alpha > 1 and zero drift.
stable::McEstimate v1_stable_limit(const stable::StableLawSpec& spec,
                                   std::int64_t mc_samples, StreamKey key);

struct DriftLimits {
  double v1 = 0.0;                       // ||mu||
  std::vector<double> steiner;           // mu / 2
  std::optional<double> vd;              // ||mu|| sqrt(det Sigma_perp) * ST(d)
};

DriftLimits drift_limits(const std::vector<double>& mu,
                         std::optional<double> sigma_perp_det, int d);

// n * E||Y - mu||^2, the variance bound for V_1.
double variance_upper_bound(std::int64_t n, double second_central_moment);

}  // namespace hullwalk::lim
