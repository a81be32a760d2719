#pragma once

#include <cstdint>
#include <vector>

#include "hullwalk/rng.hpp"

namespace hullwalk::stable {

enum class Structure { Gaussian, RotInv, DiscreteSpectral };

struct SpectralAtom {
  std::vector<double> direction;  // unit vector
  double weight = 1.0;
};

// Step distribution exactly stable with index alpha. alpha = 2 iff Gaussian.
struct StableLawSpec {
  int dim = 0;
  double alpha = 2.0;
  Structure structure = Structure::Gaussian;
  std::vector<double> sigma;        // d x d covariance (Gaussian)
  double gamma = 1.0;               // scale, cf exp(-gamma |xi|^alpha) (RotInv)
  std::vector<SpectralAtom> atoms;  // DiscreteSpectral
  bool symmetric = true;            // DiscreteSpectral: beta=0 vs beta=1 atoms
  std::vector<double> mu;           // drift; empty means zero

  bool has_drift() const;
  std::vector<double> drift() const;  // always length dim
};

// Throws std::invalid_argument naming the offending field.
void validate(const StableLawSpec& spec);

struct NormalizationPlan {
  double alpha = 2.0;
  std::vector<double> mu;

  // b_n = n^{1/alpha} (slowly varying part fixed to 1).
  double b(std::int64_t n) const;
  // a_n = n*mu for alpha > 1, zero otherwise (symmetric alpha = 1 case).
  std::vector<double> a(std::int64_t n) const;
};

NormalizationPlan normalization(const StableLawSpec& spec);

// One standard alpha-stable variate via the Chambers-Mallows-Stuck transform.
// Symmetric case has cf exp(-|t|^alpha); beta skews per the S1
// parameterization cf exp(-|t|^alpha (1 - i beta sgn(t) tan(pi alpha/2))).
// alpha = 2 returns sqrt(2) * standard normal.
double sample_scalar_stable(double alpha, double beta, Rng& rng);

// Totally skewed positive (rho)-stable with Laplace transform exp(-s^rho),
// rho in (0,1); drives the sub-Gaussian subordination.
double sample_positive_stable(double rho, Rng& rng);

// Validates once and caches the covariance factor; sampling is then
// allocation-free per step.
class StepSampler {
 public:
  explicit StepSampler(const StableLawSpec& spec, bool drop_drift = false);

  void operator()(Rng& rng, double* out) const;
  int dim() const { return spec_.dim; }

 private:
  StableLawSpec spec_;
  bool drop_drift_ = false;
  std::vector<double> chol_;         // Gaussian
  double subgauss_scale_ = 0.0;      // RotInv: 2 * gamma^{2/alpha}
  std::vector<double> atom_scale_;   // DiscreteSpectral: w_i^{1/alpha}
};

inline std::vector<double> sample_step(const StableLawSpec& spec, Rng& rng) {
  StepSampler sampler(spec);
  std::vector<double> out(spec.dim);
  sampler(rng, out.data());
  return out;
}

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t replications = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo E||X(1)|| of the drift-free spec; requires alpha > 1.
McEstimate expected_norm_x1(const StableLawSpec& spec, std::int64_t mc_samples,
                            StreamKey key);

}  // namespace hullwalk::stable
