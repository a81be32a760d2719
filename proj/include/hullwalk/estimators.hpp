#pragma once

#include <cstdint>
#include <vector>

#include "hullwalk/geometry.hpp"
#include "hullwalk/rng.hpp"
#include "hullwalk/stable.hpp"

namespace hullwalk::est {

using stable::McEstimate;
using geom::McControls;
using geom::VmMethod;

// sqrt(det(<x_k, x_l>)) of m row vectors in R^d; 0 for rank-deficient input.
double gram_det_sqrt(const std::vector<double>& vectors, int m, int d);

// Monte Carlo E[sqrt(det <X^(k)(1), X^(l)(1)>)] over m independent draws of
// one drift-free step. Requires alpha > 1 and zero drift.
McEstimate gram_limit_mc(const stable::StableLawSpec& spec, int m,
                         std::int64_t mc_samples, StreamKey key);

// Mean and standard error of V_m(conv{S(0..n)}) over independent replicate
// walks.
McEstimate empirical_mean_vm(const stable::StableLawSpec& spec,
                             std::int64_t n, int m, std::int64_t replications,
                             StreamKey key, VmMethod method = VmMethod::Auto,
                             const McControls& controls = {});

// Same walks, several m at once (one hull per replicate).
std::vector<McEstimate> empirical_mean_vm_multi(
    const stable::StableLawSpec& spec, std::int64_t n,
    const std::vector<int>& m_list, std::int64_t replications, StreamKey key,
    VmMethod method = VmMethod::Auto, const McControls& controls = {});

// Monte Carlo evaluation of the exact combinatorial mean formula: per sample
// draws m independent walks and sums sqrt-Gram terms over all index tuples
// j_1 + ... + j_m <= n, divided by m! and the tuple products. Requires
// alpha > 1, zero drift; throws BudgetError beyond the tuple budget.
McEstimate vysotsky_mean_vm(const stable::StableLawSpec& spec, std::int64_t n,
                            int m, std::int64_t mc_samples, StreamKey key);

// Sample variance of V_m(n) across replicates; std_error is the jackknife
// error of the variance.
McEstimate empirical_variance_vm(const stable::StableLawSpec& spec,
                                 std::int64_t n, int m,
                                 std::int64_t replications, StreamKey key,
                                 VmMethod method = VmMethod::Auto,
                                 const McControls& controls = {});

struct VectorEstimate {
  std::vector<double> mean;
  std::vector<double> std_error;
  std::int64_t replications = 0;
};

// Mean Steiner point of the hull across replicates.
VectorEstimate empirical_steiner_point(const stable::StableLawSpec& spec,
                                       std::int64_t n,
                                       std::int64_t replications,
                                       StreamKey key,
                                       std::int64_t num_directions = 4096);

struct ProbeFunctional {
  enum class Kind { Vm, SteinerNorm };
  Kind kind = Kind::Vm;
  int m = 1;

  static ProbeFunctional vm(int m) { return {Kind::Vm, m}; }
  static ProbeFunctional steiner_norm() { return {Kind::SteinerNorm, 0}; }
};

// Sorted sample of the scaled hull functional across replicates: V_m/b_n^m or
// ||p||/b_n for zero drift, the psi_n-transformed functional for drift specs.
std::vector<double> hull_distribution_probe(
    const stable::StableLawSpec& spec, std::int64_t n,
    std::int64_t replications, ProbeFunctional functional, StreamKey key,
    bool psi_route = false, const McControls& controls = {});

// Two-sample Kolmogorov-Smirnov statistic for sorted samples.
double two_sample_ks(const std::vector<double>& a_sorted,
                     const std::vector<double>& b_sorted);

// Large-sample critical value c(level) * sqrt((n1+n2)/(n1 n2)).
double ks_critical_value(double level, std::int64_t n1, std::int64_t n2);

}  // namespace hullwalk::est
