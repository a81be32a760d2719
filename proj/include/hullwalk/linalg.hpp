#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hullwalk/rng.hpp"

// Small dense kernels for runtime dimensions d <= ~16: modified Gram-Schmidt
// factorizations, determinants, tiny linear solves, Haar rotations and the
// min-norm-point projection used for point-to-polytope distances.
namespace hullwalk::lin {

inline double dot(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const double* a, int d) { return std::sqrt(dot(a, a, d)); }

inline double dist(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return std::sqrt(s);
}

// Modified Gram-Schmidt with one re-orthogonalization pass.
// `vecs` holds m row vectors of length d. On return `q` holds up to m
// orthonormal rows and `rdiag[k]` the residual norm of row k at elimination
// time (0 for dependent rows). Returns the numerical rank at tolerance
// `tol_rel * ||row||`.
inline int mgs_rows(const double* vecs, int m, int d, std::vector<double>& q,
                    std::vector<double>& rdiag, double tol_rel = 1e-12) {
  q.assign(static_cast<std::size_t>(m) * d, 0.0);
  rdiag.assign(m, 0.0);
  int rank = 0;
  std::vector<double> w(d);
  for (int k = 0; k < m; ++k) {
    const double* v = vecs + static_cast<std::size_t>(k) * d;
    for (int i = 0; i < d; ++i) w[i] = v[i];
    const double vn = norm(v, d);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < rank; ++j) {
        const double* qj = q.data() + static_cast<std::size_t>(j) * d;
        const double c = dot(w.data(), qj, d);
        for (int i = 0; i < d; ++i) w[i] -= c * qj[i];
      }
    }
    const double rn = norm(w.data(), d);
    rdiag[k] = rn;
    if (rn > tol_rel * (vn > 0 ? vn : 1.0)) {
      double* qk = q.data() + static_cast<std::size_t>(rank) * d;
      for (int i = 0; i < d; ++i) qk[i] = w[i] / rn;
      ++rank;
    } else {
      rdiag[k] = 0.0;
    }
  }
  return rank;
}

// sqrt(det(<x_k, x_l>)) for m row vectors in R^d, m <= d. Product of the MGS
// residual norms; 0 for rank-deficient input.
inline double gram_det_sqrt(const double* vecs, int m, int d) {
  std::vector<double> q, rdiag;
  const int rank = mgs_rows(vecs, m, d, q, rdiag);
  if (rank < m) return 0.0;
  double p = 1.0;
  for (int k = 0; k < m; ++k) p *= rdiag[k];
  return p;
}

// Unit vector orthogonal to the span of `span` (k row vectors in R^d, k < d).
// Returns false if the span is numerically degenerate or fills the space.
inline bool orthonormal_complement(const double* span, int k, int d,
                                   double* out) {
  std::vector<double> q, rdiag;
  const int rank = mgs_rows(span, k, d, q, rdiag);
  if (rank < k) return false;
  // Seed with the coordinate direction least represented in the span.
  int best = -1;
  double best_rn = -1.0;
  std::vector<double> w(d), cand(d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) w[i] = (i == j) ? 1.0 : 0.0;
    for (int r = 0; r < rank; ++r) {
      const double* qr = q.data() + static_cast<std::size_t>(r) * d;
      const double c = dot(w.data(), qr, d);
      for (int i = 0; i < d; ++i) w[i] -= c * qr[i];
    }
    const double rn = norm(w.data(), d);
    if (rn > best_rn) {
      best_rn = rn;
      best = j;
      cand = w;
    }
  }
  if (best < 0 || best_rn < 1e-9) return false;
  // One re-orthogonalization pass, then normalize.
  for (int r = 0; r < rank; ++r) {
    const double* qr = q.data() + static_cast<std::size_t>(r) * d;
    const double c = dot(cand.data(), qr, d);
    for (int i = 0; i < d; ++i) cand[i] -= c * qr[i];
  }
  const double rn = norm(cand.data(), d);
  if (rn <= 0.0) return false;
  for (int i = 0; i < d; ++i) out[i] = cand[i] / rn;
  return true;
}

// Determinant of a d x d matrix (row-major), Gaussian elimination with
// partial pivoting. The input is copied.
inline double determinant(const double* a, int d) {
  std::vector<double> m(a, a + static_cast<std::size_t>(d) * d);
  double det = 1.0;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    double best = std::fabs(m[static_cast<std::size_t>(c) * d + c]);
    for (int r = c + 1; r < d; ++r) {
      const double v = std::fabs(m[static_cast<std::size_t>(r) * d + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < d; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * d + j],
                  m[static_cast<std::size_t>(c) * d + j]);
      det = -det;
    }
    const double p = m[static_cast<std::size_t>(c) * d + c];
    det *= p;
    for (int r = c + 1; r < d; ++r) {
      const double f = m[static_cast<std::size_t>(r) * d + c] / p;
      if (f == 0.0) continue;
      for (int j = c; j < d; ++j)
        m[static_cast<std::size_t>(r) * d + j] -=
            f * m[static_cast<std::size_t>(c) * d + j];
    }
  }
  return det;
}

// Solves A x = b for a small n x n system in place; returns false if singular.
inline bool solve(std::vector<double> a, std::vector<double> b, int n,
                  std::vector<double>& x) {
  for (int c = 0; c < n; ++c) {
    int piv = c;
    double best = std::fabs(a[static_cast<std::size_t>(c) * n + c]);
    for (int r = c + 1; r < n; ++r) {
      const double v = std::fabs(a[static_cast<std::size_t>(r) * n + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) return false;
    if (piv != c) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * n + j],
                  a[static_cast<std::size_t>(c) * n + j]);
      std::swap(b[piv], b[c]);
    }
    const double p = a[static_cast<std::size_t>(c) * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double f = a[static_cast<std::size_t>(r) * n + c] / p;
      if (f == 0.0) continue;
      for (int j = c; j < n; ++j)
        a[static_cast<std::size_t>(r) * n + j] -=
            f * a[static_cast<std::size_t>(c) * n + j];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int j = r + 1; j < n; ++j)
      s -= a[static_cast<std::size_t>(r) * n + j] * x[j];
    x[r] = s / a[static_cast<std::size_t>(r) * n + r];
  }
  return true;
}

// Cholesky factor of a symmetric PSD matrix; rank-deficient directions are
// zeroed rather than rejected. Returns false on indefinite input.
inline bool cholesky_psd(const double* s, int d, std::vector<double>& lower,
                         double tol_rel = 1e-10) {
  lower.assign(static_cast<std::size_t>(d) * d, 0.0);
  double scale = 0.0;
  for (int i = 0; i < d; ++i)
    scale = std::max(scale, std::fabs(s[static_cast<std::size_t>(i) * d + i]));
  const double tol = tol_rel * (scale > 0 ? scale : 1.0);
  for (int j = 0; j < d; ++j) {
    double diag = s[static_cast<std::size_t>(j) * d + j];
    for (int k = 0; k < j; ++k) {
      const double l = lower[static_cast<std::size_t>(j) * d + k];
      diag -= l * l;
    }
    if (diag < -tol) return false;
    if (diag <= tol) {
      continue;  // zero column: PSD with deficient rank
    }
    const double lj = std::sqrt(diag);
    lower[static_cast<std::size_t>(j) * d + j] = lj;
    for (int i = j + 1; i < d; ++i) {
      double v = s[static_cast<std::size_t>(i) * d + j];
      for (int k = 0; k < j; ++k)
        v -= lower[static_cast<std::size_t>(i) * d + k] *
             lower[static_cast<std::size_t>(j) * d + k];
      lower[static_cast<std::size_t>(i) * d + j] = v / lj;
    }
  }
  return true;
}

// Haar-distributed rotation in SO(d): orthonormalized Gaussian matrix with
// the R-diagonal sign convention, determinant fixed by flipping the last
// column. Row-major; apply as y = Q x.
inline std::vector<double> haar_rotation(int d, Rng& rng) {
  std::vector<double> g(static_cast<std::size_t>(d) * d);
  for (auto& v : g) v = rng.next_gaussian();
  // Orthonormalize the columns: run MGS on the transpose.
  std::vector<double> cols(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      cols[static_cast<std::size_t>(j) * d + i] =
          g[static_cast<std::size_t>(i) * d + j];
  std::vector<double> q, rdiag;
  const int rank = mgs_rows(cols.data(), d, d, q, rdiag);
  if (rank < d) return haar_rotation(d, rng);  // measure-zero retry
  std::vector<double> rot(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      rot[static_cast<std::size_t>(i) * d + j] =
          q[static_cast<std::size_t>(j) * d + i];
  if (determinant(rot.data(), d) < 0.0) {
    for (int i = 0; i < d; ++i) rot[static_cast<std::size_t>(i) * d + (d - 1)] =
        -rot[static_cast<std::size_t>(i) * d + (d - 1)];
  }
  return rot;
}

inline void unit_sphere_direction(int d, Rng& rng, double* out) {
  while (true) {
    double n2 = 0.0;
    for (int i = 0; i < d; ++i) {
      out[i] = rng.next_gaussian();
      n2 += out[i] * out[i];
    }
    if (n2 > 1e-280) {
      const double inv = 1.0 / std::sqrt(n2);
      for (int i = 0; i < d; ++i) out[i] *= inv;
      return;
    }
  }
}

// Distance from `x` to conv{points}: Wolfe's min-norm-point iteration over
// the support points (finitely terminating descent), accurate well below the
// 1e-9 contract used by the callers.
inline double dist_to_convex_hull(const double* x, const double* pts,
                                  std::int64_t n, int d) {
  if (n <= 0) return 0.0;
  // Shifted points z_i = p_i - x; find the min-norm point of their hull.
  std::vector<double> z(static_cast<std::size_t>(n) * d);
  double scale2 = 1.0;
  for (std::int64_t i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) {
      const double v = pts[i * d + j] - x[j];
      z[static_cast<std::size_t>(i) * d + j] = v;
      scale2 = std::max(scale2, v * v);
    }
  const double tol = 1e-13 * scale2 * d;

  std::int64_t start = 0;
  double best = dot(z.data(), z.data(), d);
  for (std::int64_t i = 1; i < n; ++i) {
    const double v = dot(z.data() + i * d, z.data() + i * d, d);
    if (v < best) {
      best = v;
      start = i;
    }
  }
  std::vector<std::int64_t> corral{start};
  std::vector<double> lambda{1.0};
  std::vector<double> w(z.begin() + start * d, z.begin() + (start + 1) * d);

  const int max_major = 64 * (d + 2);
  for (int major = 0; major < max_major; ++major) {
    const double wn2 = dot(w.data(), w.data(), d);
    if (wn2 <= tol) return 0.0;
    std::int64_t j = 0;
    double bestdot = dot(w.data(), z.data(), d);
    for (std::int64_t i = 1; i < n; ++i) {
      const double v = dot(w.data(), z.data() + i * d, d);
      if (v < bestdot) {
        bestdot = v;
        j = i;
      }
    }
    if (bestdot >= wn2 - tol) break;  // w is optimal
    bool already = false;
    for (auto c : corral)
      if (c == j) already = true;
    if (already) break;
    corral.push_back(j);
    lambda.push_back(0.0);

    for (int minor = 0; minor < 64; ++minor) {
      const int k = static_cast<int>(corral.size());
      // Affine min-norm point over the corral: KKT system on the Gram matrix.
      std::vector<double> a(static_cast<std::size_t>(k + 1) * (k + 1), 0.0);
      std::vector<double> b(k + 1, 0.0);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c <= r; ++c) {
          const double g =
              dot(z.data() + corral[r] * d, z.data() + corral[c] * d, d);
          a[static_cast<std::size_t>(r) * (k + 1) + c] = g;
          a[static_cast<std::size_t>(c) * (k + 1) + r] = g;
        }
        a[static_cast<std::size_t>(r) * (k + 1) + r] += 1e-13 * scale2;
        a[static_cast<std::size_t>(r) * (k + 1) + k] = 1.0;
        a[static_cast<std::size_t>(k) * (k + 1) + r] = 1.0;
      }
      b[k] = 1.0;
      std::vector<double> sol;
      if (!solve(a, b, k + 1, sol)) {
        corral.pop_back();
        lambda.pop_back();
        minor = 64;
        break;
      }
      bool interior = true;
      for (int r = 0; r < k; ++r)
        if (sol[r] <= 1e-12) interior = false;
      if (interior) {
        lambda.assign(sol.begin(), sol.begin() + k);
        break;
      }
      // Step toward the affine solution until a weight hits zero.
      double theta = 1.0;
      for (int r = 0; r < k; ++r) {
        if (sol[r] < 1e-12 && lambda[r] > sol[r]) {
          theta = std::min(theta, lambda[r] / (lambda[r] - sol[r]));
        }
      }
      for (int r = 0; r < k; ++r)
        lambda[r] = (1.0 - theta) * lambda[r] + theta * sol[r];
      for (int r = k - 1; r >= 0; --r) {
        if (lambda[r] <= 1e-12) {
          corral.erase(corral.begin() + r);
          lambda.erase(lambda.begin() + r);
        }
      }
      if (corral.empty()) {
        corral.push_back(j);
        lambda.assign(1, 1.0);
        break;
      }
    }
    // Renormalize and rebuild w from the corral.
    double lsum = 0.0;
    for (double l : lambda) lsum += l;
    for (auto& l : lambda) l /= lsum;
    w.assign(d, 0.0);
    for (std::size_t r = 0; r < corral.size(); ++r)
      for (int i = 0; i < d; ++i) w[i] += lambda[r] * z[corral[r] * d + i];
  }
  return norm(w.data(), d);
}

}  // namespace hullwalk::lin
