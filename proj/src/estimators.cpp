#include "hullwalk/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hullwalk/errors.hpp"
#include "hullwalk/linalg.hpp"
#include "hullwalk/parallel.hpp"
#include "hullwalk/walk.hpp"

namespace hullwalk::est {

namespace {

// Stream roles hung off one replicate substream.
constexpr std::uint64_t kWalkRole = 1;
constexpr std::uint64_t kVmRole = 2;
constexpr std::uint64_t kSteinerRole = 3;

McEstimate reduce_mean(const std::vector<double>& values, StreamKey key) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var = n > 1 ? var / static_cast<double>(n - 1) : 0.0;
  McEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(var / static_cast<double>(n));
  est.replications = n;
  est.seed = key.seed;
  return est;
}

double binom_d(std::int64_t n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i)
    v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
  return v;
}

void require_zero_drift_heavy_mean(const stable::StableLawSpec& spec) {
  if (!(spec.alpha > 1.0))
    throw std::invalid_argument("first moment infinite");
  if (spec.has_drift())
    throw std::invalid_argument("estimator requires mu = 0");
}

}  // namespace

double gram_det_sqrt(const std::vector<double>& vectors, int m, int d) {
  if (m < 0 || d < 1 ||
      vectors.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(d))
    throw std::invalid_argument("vectors must be m rows of dimension d");
  if (m == 0) return 1.0;
  if (m > d) return 0.0;
  return lin::gram_det_sqrt(vectors.data(), m, d);
}

McEstimate gram_limit_mc(const stable::StableLawSpec& spec, int m,
                         std::int64_t mc_samples, StreamKey key) {
  require_zero_drift_heavy_mean(spec);
  if (m < 1 || m > spec.dim)
    throw std::invalid_argument("m must be in [1, d]");
  if (mc_samples < 2)
    throw std::invalid_argument("mc_samples must be >= 2");
  const stable::StepSampler sampler(spec, /*drop_drift=*/true);
  const int d = spec.dim;
  std::vector<double> values(mc_samples);
  par::for_index(mc_samples, [&](std::int64_t i) {
    Rng rng(key.derived(static_cast<std::uint64_t>(i)));
    std::vector<double> vecs(static_cast<std::size_t>(m) * d);
    for (int k = 0; k < m; ++k) sampler(rng, vecs.data() + static_cast<std::size_t>(k) * d);
    values[i] = lin::gram_det_sqrt(vecs.data(), m, d);
  });
  return reduce_mean(values, key);
}

namespace {

double eval_functional(const geom::Polytope& hull, int m, VmMethod method,
                       const McControls& controls, StreamKey key) {
  return geom::intrinsic_volume(hull, m, method, controls, key).value;
}

}  // namespace

std::vector<McEstimate> empirical_mean_vm_multi(
    const stable::StableLawSpec& spec, std::int64_t n,
    const std::vector<int>& m_list, std::int64_t replications, StreamKey key,
    VmMethod method, const McControls& controls) {
  stable::validate(spec);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (replications < 2)
    throw std::invalid_argument("replications must be >= 2");
  for (int m : m_list)
    if (m < 1 || m > spec.dim)
      throw std::invalid_argument("m must be in [1, d]");
  const std::size_t nm = m_list.size();
  std::vector<double> values(static_cast<std::size_t>(replications) * nm);
  par::for_index(replications, [&](std::int64_t r) {
    const StreamKey base = key.derived(static_cast<std::uint64_t>(r));
    const walk::WalkPath path =
        walk::generate_walk(spec, n, base.derived(kWalkRole));
    const geom::Polytope hull =
        geom::convex_hull(path.points, spec.dim);
    const StreamKey vm_base = base.derived(kVmRole);
    for (std::size_t mi = 0; mi < nm; ++mi) {
      values[static_cast<std::size_t>(r) * nm + mi] = eval_functional(
          hull, m_list[mi], method, controls, vm_base.derived(mi));
    }
  });
  std::vector<McEstimate> out;
  out.reserve(nm);
  std::vector<double> column(replications);
  for (std::size_t mi = 0; mi < nm; ++mi) {
    for (std::int64_t r = 0; r < replications; ++r)
      column[r] = values[static_cast<std::size_t>(r) * nm + mi];
    out.push_back(reduce_mean(column, key));
  }
  return out;
}

McEstimate empirical_mean_vm(const stable::StableLawSpec& spec,
                             std::int64_t n, int m, std::int64_t replications,
                             StreamKey key, VmMethod method,
                             const McControls& controls) {
  return empirical_mean_vm_multi(spec, n, {m}, replications, key, method,
                                 controls)[0];
}

McEstimate vysotsky_mean_vm(const stable::StableLawSpec& spec, std::int64_t n,
                            int m, std::int64_t mc_samples, StreamKey key) {
  require_zero_drift_heavy_mean(spec);
  if (m < 1 || m > spec.dim)
    throw std::invalid_argument("m must be in [1, d]");
  if (n < m) throw std::invalid_argument("n must be >= m");
  if (mc_samples < 2)
    throw std::invalid_argument("mc_samples must be >= 2");
  if (binom_d(n, m) > 2.0e5) throw BudgetError("instance too large");

  const int d = spec.dim;
  const double m_factorial = [&] {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  }();
  std::vector<double> values(mc_samples);
  par::for_index(mc_samples, [&](std::int64_t s) {
    const StreamKey base = key.derived(static_cast<std::uint64_t>(s));
    // m independent walks; prefix positions reused across all tuples.
    std::vector<walk::WalkPath> walks;
    walks.reserve(m);
    for (int k = 0; k < m; ++k)
      walks.push_back(walk::generate_walk(
          spec, n, base.derived(static_cast<std::uint64_t>(k))));
    std::vector<double> vecs(static_cast<std::size_t>(m) * d);
    std::vector<std::int64_t> j(m, 1);
    double total = 0.0;
    // Depth-first tuple enumeration of j_1 + ... + j_m <= n.
    int level = 0;
    std::int64_t used = 0;
    while (level >= 0) {
      if (level == m) {
        double denom = 1.0;
        for (int k = 0; k < m; ++k) denom *= static_cast<double>(j[k]);
        total += lin::gram_det_sqrt(vecs.data(), m, d) / denom;
        --level;
        used -= j[level];
        ++j[level];
        continue;
      }
      if (used + j[level] + (m - 1 - level) > n) {
        j[level] = 1;
        --level;
        if (level >= 0) {
          used -= j[level];
          ++j[level];
        }
        continue;
      }
      const double* pos = walks[level].point(j[level]);
      for (int t = 0; t < d; ++t)
        vecs[static_cast<std::size_t>(level) * d + t] = pos[t];
      used += j[level];
      ++level;
    }
    values[s] = total / m_factorial;
  });
  return reduce_mean(values, key);
}

McEstimate empirical_variance_vm(const stable::StableLawSpec& spec,
                                 std::int64_t n, int m,
                                 std::int64_t replications, StreamKey key,
                                 VmMethod method, const McControls& controls) {
  stable::validate(spec);
  if (replications < 4)
    throw std::invalid_argument("replications must be >= 4");
  if (m < 1 || m > spec.dim)
    throw std::invalid_argument("m must be in [1, d]");
  std::vector<double> v(replications);
  par::for_index(replications, [&](std::int64_t r) {
    const StreamKey base = key.derived(static_cast<std::uint64_t>(r));
    const walk::WalkPath path =
        walk::generate_walk(spec, n, base.derived(kWalkRole));
    const geom::Polytope hull = geom::convex_hull(path.points, spec.dim);
    v[r] = eval_functional(hull, m, method, controls, base.derived(kVmRole));
  });
  const double R = static_cast<double>(replications);
  double s1 = 0.0, s2 = 0.0;
  for (double x : v) {
    s1 += x;
    s2 += x * x;
  }
  const double mean = s1 / R;
  const double variance = (s2 - R * mean * mean) / (R - 1.0);
  // Jackknife standard error of the variance.
  std::vector<double> loo(replications);
  double loo_mean = 0.0;
  for (std::int64_t i = 0; i < replications; ++i) {
    const double m1 = (s1 - v[i]) / (R - 1.0);
    const double q = s2 - v[i] * v[i] - (R - 1.0) * m1 * m1;
    loo[i] = q / (R - 2.0);
    loo_mean += loo[i];
  }
  loo_mean /= R;
  double jk = 0.0;
  for (double x : loo) jk += (x - loo_mean) * (x - loo_mean);
  McEstimate est;
  est.mean = variance;
  est.std_error = std::sqrt((R - 1.0) / R * jk);
  est.replications = replications;
  est.seed = key.seed;
  return est;
}

VectorEstimate empirical_steiner_point(const stable::StableLawSpec& spec,
                                       std::int64_t n,
                                       std::int64_t replications,
                                       StreamKey key,
                                       std::int64_t num_directions) {
  stable::validate(spec);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (replications < 2)
    throw std::invalid_argument("replications must be >= 2");
  const int d = spec.dim;
  std::vector<double> points(static_cast<std::size_t>(replications) * d);
  par::for_index(replications, [&](std::int64_t r) {
    const StreamKey base = key.derived(static_cast<std::uint64_t>(r));
    const walk::WalkPath path =
        walk::generate_walk(spec, n, base.derived(kWalkRole));
    const geom::Polytope hull = geom::convex_hull(path.points, d);
    const geom::PointEstimate p =
        geom::steiner_point(hull, num_directions, base.derived(kSteinerRole));
    for (int j = 0; j < d; ++j)
      points[static_cast<std::size_t>(r) * d + j] = p.value[j];
  });
  VectorEstimate out;
  out.mean.assign(d, 0.0);
  out.std_error.assign(d, 0.0);
  out.replications = replications;
  for (int j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::int64_t r = 0; r < replications; ++r)
      mean += points[static_cast<std::size_t>(r) * d + j];
    mean /= static_cast<double>(replications);
    double var = 0.0;
    for (std::int64_t r = 0; r < replications; ++r) {
      const double e = points[static_cast<std::size_t>(r) * d + j] - mean;
      var += e * e;
    }
    var /= static_cast<double>(replications - 1);
    out.mean[j] = mean;
    out.std_error[j] = std::sqrt(var / static_cast<double>(replications));
  }
  return out;
}

std::vector<double> hull_distribution_probe(
    const stable::StableLawSpec& spec, std::int64_t n,
    std::int64_t replications, ProbeFunctional functional, StreamKey key,
    bool psi_route, const McControls& controls) {
  stable::validate(spec);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (replications < 2)
    throw std::invalid_argument("replications must be >= 2");
  if (psi_route && !spec.has_drift())
    throw std::invalid_argument("use center_scale");
  if (!psi_route && spec.has_drift())
    throw std::invalid_argument("drift specs must use the psi route");
  if (functional.kind == ProbeFunctional::Kind::Vm &&
      (functional.m < 1 || functional.m > spec.dim))
    throw std::invalid_argument("m must be in [1, d]");

  const int d = spec.dim;
  const double bn =
      std::pow(static_cast<double>(n), 1.0 / spec.alpha);
  walk::DriftFrame frame;
  if (psi_route) frame = walk::drift_frame(spec.drift());

  std::vector<double> out(replications);
  par::for_index(replications, [&](std::int64_t r) {
    const StreamKey base = key.derived(static_cast<std::uint64_t>(r));
    const walk::WalkPath path =
        walk::generate_walk(spec, n, base.derived(kWalkRole));
    geom::Polytope hull;
    double scale = 1.0;
    if (psi_route) {
      const std::vector<double> pts =
          walk::apply_psi_n(path, frame, n, spec.alpha);
      hull = geom::convex_hull(pts, d);
    } else {
      hull = geom::convex_hull(path.points, d);
      scale = functional.kind == ProbeFunctional::Kind::Vm
                  ? std::pow(bn, functional.m)
                  : bn;
    }
    double f = 0.0;
    if (functional.kind == ProbeFunctional::Kind::Vm) {
      f = eval_functional(hull, functional.m, VmMethod::Auto, controls,
                          base.derived(kVmRole));
    } else {
      const geom::PointEstimate p = geom::steiner_point(
          hull, controls.sphere_directions, base.derived(kSteinerRole));
      f = lin::norm(p.value.data(), d);
    }
    out[r] = f / scale;
  });
  std::sort(out.begin(), out.end());
  return out;
}

double two_sample_ks(const std::vector<double>& a_sorted,
                     const std::vector<double>& b_sorted) {
  const std::int64_t na = static_cast<std::int64_t>(a_sorted.size());
  const std::int64_t nb = static_cast<std::int64_t>(b_sorted.size());
  if (na == 0 || nb == 0)
    throw std::invalid_argument("samples must be nonempty");
  std::int64_t i = 0, j = 0;
  double stat = 0.0;
  while (i < na && j < nb) {
    const double x = std::min(a_sorted[i], b_sorted[j]);
    while (i < na && a_sorted[i] <= x) ++i;
    while (j < nb && b_sorted[j] <= x) ++j;
    stat = std::max(stat, std::fabs(static_cast<double>(i) / na -
                                    static_cast<double>(j) / nb));
  }
  return stat;
}

double ks_critical_value(double level, std::int64_t n1, std::int64_t n2) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("level must be in (0, 1)");
  const double c = std::sqrt(-0.5 * std::log(level / 2.0));
  return c * std::sqrt(static_cast<double>(n1 + n2) /
                       (static_cast<double>(n1) * static_cast<double>(n2)));
}

}  // namespace hullwalk::est
