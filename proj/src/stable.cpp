#include "hullwalk/stable.hpp"

#include <cmath>
#include <stdexcept>

#include "hullwalk/linalg.hpp"
#include "hullwalk/parallel.hpp"

namespace hullwalk::stable {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
}  // namespace

bool StableLawSpec::has_drift() const {
  for (double v : mu)
    if (v != 0.0) return true;
  return false;
}

std::vector<double> StableLawSpec::drift() const {
  std::vector<double> d(dim, 0.0);
  for (std::size_t i = 0; i < mu.size() && i < d.size(); ++i) d[i] = mu[i];
  return d;
}

void validate(const StableLawSpec& spec) {
  if (spec.dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (spec.dim > 64) throw std::invalid_argument("dim must be <= 64");
  if (!(spec.alpha > 0.0) || spec.alpha > 2.0)
    throw std::invalid_argument("alpha must be in (0, 2]");
  const bool gaussian = spec.structure == Structure::Gaussian;
  if (gaussian != (spec.alpha == 2.0))
    throw std::invalid_argument("alpha = 2 exactly for Gaussian structure");
  if (!spec.mu.empty() &&
      spec.mu.size() != static_cast<std::size_t>(spec.dim))
    throw std::invalid_argument("mu must have dim entries");
  if (spec.has_drift() && spec.alpha <= 1.0)
    throw std::invalid_argument("drift not supported for alpha <= 1");
  switch (spec.structure) {
    case Structure::Gaussian: {
      const std::size_t dd = static_cast<std::size_t>(spec.dim) * spec.dim;
      if (spec.sigma.size() != dd)
        throw std::invalid_argument("sigma must be a dim x dim matrix");
      for (int i = 0; i < spec.dim; ++i)
        for (int j = 0; j < i; ++j) {
          const double a = spec.sigma[static_cast<std::size_t>(i) * spec.dim + j];
          const double b = spec.sigma[static_cast<std::size_t>(j) * spec.dim + i];
          if (std::fabs(a - b) > 1e-10 * (1.0 + std::fabs(a)))
            throw std::invalid_argument("sigma must be symmetric");
        }
      std::vector<double> chol;
      if (!lin::cholesky_psd(spec.sigma.data(), spec.dim, chol))
        throw std::invalid_argument("sigma must be positive semidefinite");
      break;
    }
    case Structure::RotInv:
      if (!(spec.gamma > 0.0))
        throw std::invalid_argument("gamma must be > 0");
      if (spec.alpha >= 2.0)
        throw std::invalid_argument("alpha must be < 2 for RotInv structure");
      break;
    case Structure::DiscreteSpectral: {
      if (spec.atoms.empty())
        throw std::invalid_argument("atoms must be nonempty");
      if (spec.alpha >= 2.0)
        throw std::invalid_argument("alpha must be < 2 for spectral atoms");
      if (spec.alpha == 1.0 && !spec.symmetric)
        throw std::invalid_argument(
            "alpha = 1 supported only with symmetric structure");
      for (const auto& a : spec.atoms) {
        if (a.direction.size() != static_cast<std::size_t>(spec.dim))
          throw std::invalid_argument("atom direction must have dim entries");
        if (std::fabs(lin::norm(a.direction.data(), spec.dim) - 1.0) > 1e-12)
          throw std::invalid_argument("atom directions must be unit length");
        if (!(a.weight > 0.0))
          throw std::invalid_argument("atom weights must be > 0");
      }
      break;
    }
  }
}

double NormalizationPlan::b(std::int64_t n) const {
  return std::pow(static_cast<double>(n), 1.0 / alpha);
}

std::vector<double> NormalizationPlan::a(std::int64_t n) const {
  std::vector<double> out(mu.size(), 0.0);
  if (alpha > 1.0)
    for (std::size_t i = 0; i < mu.size(); ++i)
      out[i] = static_cast<double>(n) * mu[i];
  return out;
}

NormalizationPlan normalization(const StableLawSpec& spec) {
  return NormalizationPlan{spec.alpha, spec.drift()};
}

double sample_scalar_stable(double alpha, double beta, Rng& rng) {
  if (!(alpha > 0.0) || alpha > 2.0)
    throw std::invalid_argument("alpha must be in (0, 2]");
  if (std::fabs(beta) > 1.0)
    throw std::invalid_argument("beta must be in [-1, 1]");
  const double u = kPi * (rng.next_unit() - 0.5);  // uniform (-pi/2, pi/2)
  if (alpha == 2.0) {
    const double w = rng.next_exponential();
    return 2.0 * std::sin(u) * std::sqrt(w);
  }
  if (alpha == 1.0) {
    if (beta != 0.0)
      throw std::invalid_argument(
        "alpha = 1 supported only in the symmetric case");
    return std::tan(u);
  }
  const double w = rng.next_exponential();
  if (beta == 0.0) {
    return std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha) *
           std::pow(std::cos(u - alpha * u) / w, (1.0 - alpha) / alpha);
  }
  const double t = beta * std::tan(kHalfPi * alpha);
  const double b0 = std::atan(t) / alpha;
  const double s0 = std::pow(1.0 + t * t, 0.5 / alpha);
  return s0 * std::sin(alpha * (u + b0)) / std::pow(std::cos(u), 1.0 / alpha) *
         std::pow(std::cos(u - alpha * (u + b0)) / w, (1.0 - alpha) / alpha);
}

double sample_positive_stable(double rho, Rng& rng) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("rho must be in (0, 1)");
  // Standard skewed sample rescaled so that E exp(-sA) = exp(-s^rho).
  const double x = sample_scalar_stable(rho, 1.0, rng);
  return std::pow(std::cos(kHalfPi * rho), 1.0 / rho) * x;
}

StepSampler::StepSampler(const StableLawSpec& spec, bool drop_drift)
    : spec_(spec), drop_drift_(drop_drift) {
  validate(spec_);
  spec_.mu = spec_.drift();
  switch (spec_.structure) {
    case Structure::Gaussian:
      if (!lin::cholesky_psd(spec_.sigma.data(), spec_.dim, chol_))
        throw std::invalid_argument("sigma must be positive semidefinite");
      break;
    case Structure::RotInv:
      // Y = sqrt(2 gamma^{2/alpha} A) G with E[exp(-sA)] = exp(-s^{alpha/2})
      // and G standard normal gives E[exp(i<xi,Y>)] = exp(-gamma |xi|^alpha).
      subgauss_scale_ = 2.0 * std::pow(spec_.gamma, 2.0 / spec_.alpha);
      break;
    case Structure::DiscreteSpectral:
      atom_scale_.reserve(spec_.atoms.size());
      for (const auto& a : spec_.atoms)
        atom_scale_.push_back(std::pow(a.weight, 1.0 / spec_.alpha));
      break;
  }
}

void StepSampler::operator()(Rng& rng, double* out) const {
  const int d = spec_.dim;
  switch (spec_.structure) {
    case Structure::Gaussian: {
      double z[64];
      for (int i = 0; i < d; ++i) z[i] = rng.next_gaussian();
      for (int i = 0; i < d; ++i) {
        double v = 0.0;
        for (int j = 0; j <= i; ++j)
          v += chol_[static_cast<std::size_t>(i) * d + j] * z[j];
        out[i] = v;
      }
      break;
    }
    case Structure::RotInv: {
      const double a = sample_positive_stable(spec_.alpha / 2.0, rng);
      const double s = std::sqrt(subgauss_scale_ * a);
      for (int i = 0; i < d; ++i) out[i] = s * rng.next_gaussian();
      break;
    }
    case Structure::DiscreteSpectral: {
      for (int i = 0; i < d; ++i) out[i] = 0.0;
      const double beta = spec_.symmetric ? 0.0 : 1.0;
      for (std::size_t k = 0; k < spec_.atoms.size(); ++k) {
        const double x =
            atom_scale_[k] * sample_scalar_stable(spec_.alpha, beta, rng);
        const double* dir = spec_.atoms[k].direction.data();
        for (int i = 0; i < d; ++i) out[i] += x * dir[i];
      }
      break;
    }
  }
  if (!drop_drift_)
    for (int i = 0; i < d; ++i) out[i] += spec_.mu[i];
}

McEstimate expected_norm_x1(const StableLawSpec& spec,
                            std::int64_t mc_samples, StreamKey key) {
  validate(spec);
  if (!(spec.alpha > 1.0))
    throw std::invalid_argument("first moment infinite");
  if (mc_samples < 2)
    throw std::invalid_argument("mc_samples must be >= 2");
  const StepSampler sampler(spec, /*drop_drift=*/true);
  const int d = spec.dim;
  std::vector<double> norms(mc_samples);
  par::for_index(mc_samples, [&](std::int64_t i) {
    Rng rng(key.derived(static_cast<std::uint64_t>(i)));
    double y[64];
    sampler(rng, y);
    norms[i] = lin::norm(y, d);
  });
  double mean = 0.0;
  for (double v : norms) mean += v;
  mean /= static_cast<double>(mc_samples);
  double var = 0.0;
  for (double v : norms) var += (v - mean) * (v - mean);
  var /= static_cast<double>(mc_samples - 1);
  McEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(var / static_cast<double>(mc_samples));
  est.replications = mc_samples;
  est.seed = key.seed;
  return est;
}

}  // namespace hullwalk::stable
