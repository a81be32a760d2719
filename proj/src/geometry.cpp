#include "hullwalk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hullwalk/linalg.hpp"
#include "hullwalk/parallel.hpp"

namespace hullwalk::geom {

namespace {

constexpr double kOrientationEps = 1e-12;  // relative to coordinate magnitude
constexpr double kRankEps = 1e-9;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

struct BuildFacet {
  std::vector<int> v;  // input point indices, |v| == d
  std::vector<double> normal;
  double offset = 0.0;
  bool alive = true;
};

// Unit normal of the hyperplane through the d points `ids`, oriented away
// from `interior`.
bool facet_plane(const double* pts, int d, const std::vector<int>& ids,
                 const double* interior, std::vector<double>& normal,
                 double& offset) {
  normal.assign(d, 0.0);
  const double* v0 = pts + static_cast<std::size_t>(ids[0]) * d;
  if (d == 2) {
    const double* v1 = pts + static_cast<std::size_t>(ids[1]) * d;
    const double ex = v1[0] - v0[0], ey = v1[1] - v0[1];
    const double len = std::hypot(ex, ey);
    if (len <= 0.0) return false;
    normal[0] = -ey / len;
    normal[1] = ex / len;
  } else if (d == 3) {
    const double* v1 = pts + static_cast<std::size_t>(ids[1]) * d;
    const double* v2 = pts + static_cast<std::size_t>(ids[2]) * d;
    const double a[3] = {v1[0] - v0[0], v1[1] - v0[1], v1[2] - v0[2]};
    const double b[3] = {v2[0] - v0[0], v2[1] - v0[1], v2[2] - v0[2]};
    normal[0] = a[1] * b[2] - a[2] * b[1];
    normal[1] = a[2] * b[0] - a[0] * b[2];
    normal[2] = a[0] * b[1] - a[1] * b[0];
    const double len = lin::norm(normal.data(), 3);
    if (len <= 0.0) return false;
    for (auto& x : normal) x /= len;
  } else {
    std::vector<double> span(static_cast<std::size_t>(d - 1) * d);
    for (int i = 1; i < d; ++i) {
      const double* vi = pts + static_cast<std::size_t>(ids[i]) * d;
      for (int j = 0; j < d; ++j)
        span[static_cast<std::size_t>(i - 1) * d + j] = vi[j] - v0[j];
    }
    if (!lin::orthonormal_complement(span.data(), d - 1, d, normal.data()))
      return false;
  }
  offset = lin::dot(normal.data(), v0, d);
  const double side = lin::dot(normal.data(), interior, d) - offset;
  if (side > 0.0) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  } else if (side == 0.0) {
    return false;
  }
  return true;
}

struct RawHull {
  int rank = 0;
  std::vector<int> vertex_ids;      // indices into the input point array
  std::vector<BuildFacet> facets;   // full-dimensional case only
};

// Greedy affine-rank detection; fills `pivots` (first entry is the
// lexicographically smallest point) and an orthonormal basis of the affine
// span (rank rows of length d).
int affine_rank(const double* pts, std::int64_t n, int d, double scale,
                std::vector<int>& pivots, std::vector<double>& basis) {
  std::int64_t p0 = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    const double* a = pts + i * d;
    const double* b = pts + p0 * d;
    for (int j = 0; j < d; ++j) {
      if (a[j] < b[j]) {
        p0 = i;
        break;
      }
      if (a[j] > b[j]) break;
    }
  }
  pivots.assign(1, static_cast<int>(p0));
  basis.clear();
  std::vector<double> w(d);
  const double* origin = pts + p0 * d;
  while (static_cast<int>(basis.size()) / d < d) {
    const int r = static_cast<int>(basis.size()) / d;
    double best = 0.0;
    std::int64_t best_i = -1;
    std::vector<double> best_w;
    for (std::int64_t i = 0; i < n; ++i) {
      const double* p = pts + i * d;
      for (int j = 0; j < d; ++j) w[j] = p[j] - origin[j];
      for (int k = 0; k < r; ++k) {
        const double* bk = basis.data() + static_cast<std::size_t>(k) * d;
        const double c = lin::dot(w.data(), bk, d);
        for (int j = 0; j < d; ++j) w[j] -= c * bk[j];
      }
      const double rn = lin::norm(w.data(), d);
      if (rn > best) {
        best = rn;
        best_i = i;
        best_w = w;
      }
    }
    if (best_i < 0 || best <= kRankEps * scale) break;
    // Re-orthogonalize the winner before appending.
    for (int k = 0; k < r; ++k) {
      const double* bk = basis.data() + static_cast<std::size_t>(k) * d;
      const double c = lin::dot(best_w.data(), bk, d);
      for (int j = 0; j < d; ++j) best_w[j] -= c * bk[j];
    }
    const double rn = lin::norm(best_w.data(), d);
    for (int j = 0; j < d; ++j) basis.push_back(best_w[j] / rn);
    pivots.push_back(static_cast<int>(best_i));
  }
  return static_cast<int>(basis.size()) / d;
}

RawHull build_full_dim(const double* pts, std::int64_t n, int d, double scale,
                       const std::vector<int>& pivots);

RawHull build_hull(const double* pts, std::int64_t n, int d) {
  double scale = 1.0;
  for (std::int64_t i = 0; i < n * d; ++i)
    scale = std::max(scale, std::fabs(pts[i]));

  std::vector<int> pivots;
  std::vector<double> basis;
  const int rank = affine_rank(pts, n, d, scale, pivots, basis);

  if (rank == 0) {
    RawHull h;
    h.rank = 0;
    h.vertex_ids = {pivots[0]};
    return h;
  }
  if (rank == d && d >= 2) return build_full_dim(pts, n, d, scale, pivots);
  if (rank == 1) {
    // Extremes along the single span direction.
    const double* dir = basis.data();
    const double* origin = pts + static_cast<std::size_t>(pivots[0]) * d;
    std::int64_t lo = 0, hi = 0;
    double lov = 0, hiv = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      double t = 0;
      for (int j = 0; j < d; ++j) t += dir[j] * (pts[i * d + j] - origin[j]);
      if (i == 0 || t < lov) {
        lov = t;
        lo = i;
      }
      if (i == 0 || t > hiv) {
        hiv = t;
        hi = i;
      }
    }
    RawHull h;
    h.rank = 1;
    h.vertex_ids = {static_cast<int>(lo)};
    if (hi != lo) h.vertex_ids.push_back(static_cast<int>(hi));
    std::sort(h.vertex_ids.begin(), h.vertex_ids.end());
    return h;
  }
  // 1 < rank < d: hull inside the affine span, mapped back by input index.
  const double* origin = pts + static_cast<std::size_t>(pivots[0]) * d;
  std::vector<double> proj(static_cast<std::size_t>(n) * rank);
  for (std::int64_t i = 0; i < n; ++i) {
    for (int k = 0; k < rank; ++k) {
      const double* bk = basis.data() + static_cast<std::size_t>(k) * d;
      double t = 0;
      for (int j = 0; j < d; ++j) t += bk[j] * (pts[i * d + j] - origin[j]);
      proj[static_cast<std::size_t>(i) * rank + k] = t;
    }
  }
  RawHull sub = build_hull(proj.data(), n, rank);
  RawHull h;
  h.rank = rank;
  h.vertex_ids = sub.vertex_ids;
  return h;
}

RawHull build_full_dim(const double* pts, std::int64_t n, int d, double scale,
                       const std::vector<int>& pivots) {
  const double tol = kOrientationEps * scale;
  std::vector<double> interior(d, 0.0);
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j < d; ++j)
      interior[j] += pts[static_cast<std::size_t>(pivots[k]) * d + j] / (d + 1);

  std::vector<BuildFacet> facets;
  auto add_facet = [&](std::vector<int> ids) {
    BuildFacet f;
    f.v = std::move(ids);
    if (!facet_plane(pts, d, f.v, interior.data(), f.normal, f.offset))
      throw std::runtime_error("degenerate facet construction");
    facets.push_back(std::move(f));
  };

  for (int k = 0; k <= d; ++k) {
    std::vector<int> ids;
    ids.reserve(d);
    for (int i = 0; i <= d; ++i)
      if (i != k) ids.push_back(pivots[i]);
    add_facet(std::move(ids));
  }

  // Deterministically shuffled insertion order for the non-pivot points.
  std::vector<std::int64_t> order;
  order.reserve(n);
  for (std::int64_t i = 0; i < n; ++i) {
    bool is_pivot = false;
    for (int p : pivots) is_pivot |= (p == i);
    if (!is_pivot) order.push_back(i);
  }
  {
    Rng rng(0x48554C4C00000000ull ^ static_cast<std::uint64_t>(n),
            static_cast<std::uint64_t>(d));
    for (std::int64_t i = static_cast<std::int64_t>(order.size()) - 1; i > 0;
         --i) {
      const std::int64_t j =
          static_cast<std::int64_t>(rng.next_u64() % (i + 1));
      std::swap(order[i], order[j]);
    }
  }

  std::vector<int> visible;
  std::map<std::vector<int>, int> ridge_count;
  for (std::int64_t oi = 0; oi < static_cast<std::int64_t>(order.size());
       ++oi) {
    const std::int64_t idx = order[oi];
    const double* p = pts + idx * d;
    visible.clear();
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      if (!facets[fi].alive) continue;
      if (lin::dot(facets[fi].normal.data(), p, d) - facets[fi].offset > tol)
        visible.push_back(fi);
    }
    if (visible.empty()) continue;

    ridge_count.clear();
    std::vector<int> ridge(d - 1);
    for (int fi : visible) {
      const auto& fv = facets[fi].v;
      for (int drop = 0; drop < d; ++drop) {
        int t = 0;
        for (int i = 0; i < d; ++i)
          if (i != drop) ridge[t++] = fv[i];
        std::sort(ridge.begin(), ridge.end());
        ++ridge_count[ridge];
      }
    }
    for (int fi : visible) facets[fi].alive = false;
    for (const auto& [r, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> ids = r;
      ids.push_back(static_cast<int>(idx));
      add_facet(std::move(ids));
    }
    // Compact occasionally so the visibility scan stays proportional to the
    // live facet count.
    if (facets.size() > 64 &&
        std::count_if(facets.begin(), facets.end(),
                      [](const BuildFacet& f) { return !f.alive; }) >
            static_cast<std::int64_t>(facets.size() / 2)) {
      std::vector<BuildFacet> live;
      live.reserve(facets.size() / 2 + 1);
      for (auto& f : facets)
        if (f.alive) live.push_back(std::move(f));
      facets.swap(live);
    }
  }

  RawHull h;
  h.rank = d;
  for (auto& f : facets) {
    if (!f.alive) continue;
    h.facets.push_back(std::move(f));
  }
  std::vector<int> ids;
  for (const auto& f : h.facets)
    ids.insert(ids.end(), f.v.begin(), f.v.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  h.vertex_ids = std::move(ids);
  return h;
}

// Rebuilds the d = 2 hull as an ordered ring, dropping vertices that sit on
// a straight edge within tolerance.
void polygon_ring(const double* pts, double scale, std::vector<int>& ids) {
  const double tol = kOrientationEps * scale;
  double cx = 0, cy = 0;
  for (int id : ids) {
    cx += pts[static_cast<std::size_t>(id) * 2];
    cy += pts[static_cast<std::size_t>(id) * 2 + 1];
  }
  cx /= static_cast<double>(ids.size());
  cy /= static_cast<double>(ids.size());
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const double aa = std::atan2(pts[static_cast<std::size_t>(a) * 2 + 1] - cy,
                                 pts[static_cast<std::size_t>(a) * 2] - cx);
    const double ab = std::atan2(pts[static_cast<std::size_t>(b) * 2 + 1] - cy,
                                 pts[static_cast<std::size_t>(b) * 2] - cx);
    if (aa != ab) return aa < ab;
    return a < b;
  });
  bool changed = true;
  while (changed && ids.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < ids.size() && ids.size() > 3; ++i) {
      const std::size_t j = (i + 1) % ids.size();
      const std::size_t k = (i + 2) % ids.size();
      const double* a = pts + static_cast<std::size_t>(ids[i]) * 2;
      const double* b = pts + static_cast<std::size_t>(ids[j]) * 2;
      const double* c = pts + static_cast<std::size_t>(ids[k]) * 2;
      const double cross =
          (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
      const double base = std::hypot(c[0] - a[0], c[1] - a[1]);
      if (std::fabs(cross) <= tol * std::max(base, 1.0)) {
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
}

Polytope finalize(const double* pts, int d, const RawHull& raw) {
  std::vector<int> ids = raw.vertex_ids;
  std::vector<Facet> facets;
  if (raw.rank == d && d >= 2) {
    if (d == 2) {
      double scale = 1.0;
      for (int id : ids)
        for (int j = 0; j < 2; ++j)
          scale = std::max(scale,
                           std::fabs(pts[static_cast<std::size_t>(id) * 2 + j]));
      polygon_ring(pts, scale, ids);
      std::vector<double> verts(ids.size() * 2);
      double cx = 0, cy = 0;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        verts[i * 2] = pts[static_cast<std::size_t>(ids[i]) * 2];
        verts[i * 2 + 1] = pts[static_cast<std::size_t>(ids[i]) * 2 + 1];
        cx += verts[i * 2];
        cy += verts[i * 2 + 1];
      }
      cx /= static_cast<double>(ids.size());
      cy /= static_cast<double>(ids.size());
      const double c[2] = {cx, cy};
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t j = (i + 1) % ids.size();
        Facet f;
        f.vertices = {static_cast<int>(i), static_cast<int>(j)};
        f.normal.assign(2, 0.0);
        std::vector<int> loc = {static_cast<int>(i), static_cast<int>(j)};
        if (!facet_plane(verts.data(), 2, loc, c, f.normal, f.offset))
          continue;  // duplicate ring points collapse to zero-length edges
        facets.push_back(std::move(f));
      }
      return Polytope(2, 2, std::move(verts), std::move(facets));
    }
    std::vector<int> remap(ids.empty() ? 0 : ids.back() + 1, -1);
    for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);
    facets.reserve(raw.facets.size());
    for (const auto& bf : raw.facets) {
      Facet f;
      f.vertices.reserve(bf.v.size());
      for (int v : bf.v) f.vertices.push_back(remap[v]);
      f.normal = bf.normal;
      f.offset = bf.offset;
      facets.push_back(std::move(f));
    }
  }
  std::vector<double> verts(ids.size() * static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (int j = 0; j < d; ++j)
      verts[i * d + j] = pts[static_cast<std::size_t>(ids[i]) * d + j];
  return Polytope(d, raw.rank, std::move(verts), std::move(facets));
}

double polytope_scale(const Polytope& p) {
  double s = 1.0;
  for (double v : p.vertices()) s = std::max(s, std::fabs(v));
  return s;
}

double point_segment_dist(const double* x, const double* a, const double* b,
                          int d) {
  double ab2 = 0.0, apab = 0.0;
  for (int j = 0; j < d; ++j) {
    const double e = b[j] - a[j];
    ab2 += e * e;
    apab += (x[j] - a[j]) * e;
  }
  double t = ab2 > 0 ? apab / ab2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double s = 0.0;
  for (int j = 0; j < d; ++j) {
    const double c = a[j] + t * (b[j] - a[j]) - x[j];
    s += c * c;
  }
  return std::sqrt(s);
}

double point_triangle_dist(const double* x, const double* a, const double* b,
                           const double* c) {
  // Barycentric solve in the triangle plane; fall back to the edges.
  double u[3], v[3], w[3];
  for (int j = 0; j < 3; ++j) {
    u[j] = b[j] - a[j];
    v[j] = c[j] - a[j];
    w[j] = x[j] - a[j];
  }
  const double uu = lin::dot(u, u, 3), vv = lin::dot(v, v, 3),
               uv = lin::dot(u, v, 3);
  const double wu = lin::dot(w, u, 3), wv = lin::dot(w, v, 3);
  const double det = uu * vv - uv * uv;
  if (det > 0) {
    const double s = (vv * wu - uv * wv) / det;
    const double t = (uu * wv - uv * wu) / det;
    if (s >= 0 && t >= 0 && s + t <= 1) {
      double dist2 = 0.0;
      for (int j = 0; j < 3; ++j) {
        const double e = w[j] - s * u[j] - t * v[j];
        dist2 += e * e;
      }
      return std::sqrt(std::max(0.0, dist2));
    }
  }
  double best = point_segment_dist(x, a, b, 3);
  best = std::min(best, point_segment_dist(x, a, c, 3));
  best = std::min(best, point_segment_dist(x, b, c, 3));
  return best;
}

bool inside_by_facets(const Polytope& p, const double* x, double slack) {
  for (const auto& f : p.facets())
    if (lin::dot(f.normal.data(), x, p.dim()) > f.offset + slack) return false;
  return true;
}

}  // namespace

double kappa(int d) {
  return std::pow(3.14159265358979323846, d / 2.0) / std::tgamma(1.0 + d / 2.0);
}

double varpi(int d) { return d * kappa(d); }

Polytope convex_hull(const double* points, std::int64_t count, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (count <= 0) throw std::invalid_argument("no points");
  for (std::int64_t i = 0; i < count * dim; ++i)
    if (!std::isfinite(points[i]))
      throw std::invalid_argument("invalid coordinate");
  return finalize(points, dim, build_hull(points, count, dim));
}

Polytope convex_hull(const std::vector<double>& points, int dim) {
  if (dim >= 1 && points.size() % static_cast<std::size_t>(dim) != 0)
    throw std::invalid_argument("point array size not a multiple of dim");
  return convex_hull(points.data(),
                     static_cast<std::int64_t>(points.size()) / dim, dim);
}

double support_function(const Polytope& p, const double* direction) {
  if (lin::norm(direction, p.dim()) == 0.0)
    throw std::invalid_argument("zero direction");
  double best = -std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < p.vertex_count(); ++i)
    best = std::max(best, lin::dot(direction, p.vertex(i), p.dim()));
  return best;
}

double volume(const Polytope& p) {
  const int d = p.dim();
  if (!p.full_dimensional()) return 0.0;
  if (d == 1) {
    double lo = p.vertex(0)[0], hi = lo;
    for (std::int64_t i = 1; i < p.vertex_count(); ++i) {
      lo = std::min(lo, p.vertex(i)[0]);
      hi = std::max(hi, p.vertex(i)[0]);
    }
    return hi - lo;
  }
  std::vector<double> c(d, 0.0);
  for (std::int64_t i = 0; i < p.vertex_count(); ++i)
    for (int j = 0; j < d; ++j) c[j] += p.vertex(i)[j] / p.vertex_count();
  const double dfact = factorial(d);
  std::vector<double> m(static_cast<std::size_t>(d) * d);
  double vol = 0.0;
  for (const auto& f : p.facets()) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m[static_cast<std::size_t>(i) * d + j] =
            p.vertex(f.vertices[i])[j] - c[j];
    vol += std::fabs(lin::determinant(m.data(), d)) / dfact;
  }
  return vol;
}

double surface_area_half(const Polytope& p) {
  const int d = p.dim();
  if (!p.full_dimensional() || d < 2) return 0.0;
  const double fact = factorial(d - 1);
  std::vector<double> span(static_cast<std::size_t>(d - 1) * d);
  double area = 0.0;
  for (const auto& f : p.facets()) {
    const double* v0 = p.vertex(f.vertices[0]);
    for (int i = 1; i < d; ++i)
      for (int j = 0; j < d; ++j)
        span[static_cast<std::size_t>(i - 1) * d + j] =
            p.vertex(f.vertices[i])[j] - v0[j];
    area += lin::gram_det_sqrt(span.data(), d - 1, d) / fact;
  }
  return 0.5 * area;
}

IntrinsicVolumeEstimate mean_width_and_v1(const Polytope& p,
                                          std::int64_t num_directions,
                                          StreamKey key) {
  const int d = p.dim();
  IntrinsicVolumeEstimate est;
  est.m = 1;
  est.method = IntrinsicVolumeEstimate::Method::Exact;
  if (p.degenerate_rank() == 0) return est;
  if (p.degenerate_rank() == 1) {
    double len = 0.0;
    for (std::int64_t i = 0; i < p.vertex_count(); ++i)
      for (std::int64_t j = i + 1; j < p.vertex_count(); ++j)
        len = std::max(len, lin::dist(p.vertex(i), p.vertex(j), d));
    est.value = len;
    return est;
  }
  if (d == 2) {
    double per = 0.0;
    for (const auto& f : p.facets())
      per += lin::dist(p.vertex(f.vertices[0]), p.vertex(f.vertices[1]), 2);
    est.value = 0.5 * per;
    return est;
  }
  if (num_directions < 1)
    throw std::invalid_argument("num_directions must be >= 1");
  std::vector<double> s(num_directions);
  par::for_index(num_directions, [&](std::int64_t i) {
    Rng rng(key.derived(static_cast<std::uint64_t>(i)));
    std::vector<double> dir(d);
    lin::unit_sphere_direction(d, rng, dir.data());
    s[i] = support_function(p, dir.data());
  });
  const double c = d * kappa(d) / kappa(d - 1);
  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= static_cast<double>(num_directions);
  double var = 0.0;
  for (double v : s) var += (v - mean) * (v - mean);
  var = num_directions > 1 ? var / (num_directions - 1) : 0.0;
  est.method = IntrinsicVolumeEstimate::Method::SphereQuadrature;
  est.value = c * mean;
  est.std_error = c * std::sqrt(var / static_cast<double>(num_directions));
  return est;
}

PointEstimate steiner_point(const Polytope& p, std::int64_t num_directions,
                            StreamKey key) {
  const int d = p.dim();
  PointEstimate out;
  out.value.assign(d, 0.0);
  out.std_error.assign(d, 0.0);
  if (p.vertex_count() == 1) {
    out.value.assign(p.vertex(0), p.vertex(0) + d);
    return out;
  }
  if (num_directions < 1)
    throw std::invalid_argument("num_directions must be >= 1");
  std::vector<double> samples(static_cast<std::size_t>(num_directions) * d);
  par::for_index(num_directions, [&](std::int64_t i) {
    Rng rng(key.derived(static_cast<std::uint64_t>(i)));
    std::vector<double> dir(d);
    lin::unit_sphere_direction(d, rng, dir.data());
    const double s = support_function(p, dir.data());
    for (int j = 0; j < d; ++j) samples[i * d + j] = s * dir[j];
  });
  for (int j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::int64_t i = 0; i < num_directions; ++i)
      mean += samples[i * d + j];
    mean /= static_cast<double>(num_directions);
    double var = 0.0;
    for (std::int64_t i = 0; i < num_directions; ++i) {
      const double e = samples[i * d + j] - mean;
      var += e * e;
    }
    var = num_directions > 1 ? var / (num_directions - 1) : 0.0;
    out.value[j] = d * mean;
    out.std_error[j] =
        d * std::sqrt(var / static_cast<double>(num_directions));
  }
  return out;
}

std::vector<double> box_intrinsic_volumes(const std::vector<double>& sides) {
  for (double s : sides)
    if (!(s >= 0.0)) throw std::invalid_argument("box sides must be >= 0");
  std::vector<double> e(sides.size() + 1, 0.0);
  e[0] = 1.0;
  for (double s : sides)
    for (std::size_t m = e.size() - 1; m >= 1; --m) e[m] += s * e[m - 1];
  return e;
}

IntrinsicVolumeEstimate kubota_vm(const Polytope& p, int m,
                                  std::int64_t num_rotations, StreamKey key) {
  const int d = p.dim();
  if (m < 1 || m > d) throw std::invalid_argument("m must be in [1, d]");
  if (m == d) {
    IntrinsicVolumeEstimate est;
    est.m = m;
    est.value = volume(p);
    est.method = IntrinsicVolumeEstimate::Method::Exact;
    return est;
  }
  if (num_rotations < 1)
    throw std::invalid_argument("num_rotations must be >= 1");
  const std::int64_t nv = p.vertex_count();
  std::vector<double> vols(num_rotations);
  par::for_index(num_rotations, [&](std::int64_t i) {
    Rng rng(key.derived(static_cast<std::uint64_t>(i)));
    const std::vector<double> rot = lin::haar_rotation(d, rng);
    if (m == 1) {
      double lo = 0, hi = 0;
      for (std::int64_t v = 0; v < nv; ++v) {
        const double t = lin::dot(rot.data(), p.vertex(v), d);
        if (v == 0 || t < lo) lo = t;
        if (v == 0 || t > hi) hi = t;
      }
      vols[i] = hi - lo;
      return;
    }
    std::vector<double> proj(static_cast<std::size_t>(nv) * m);
    for (std::int64_t v = 0; v < nv; ++v)
      for (int r = 0; r < m; ++r)
        proj[static_cast<std::size_t>(v) * m + r] =
            lin::dot(rot.data() + static_cast<std::size_t>(r) * d,
                     p.vertex(v), d);
    vols[i] = volume(convex_hull(proj.data(), nv, m));
  });
  const double c = binom(d, m) * kappa(d) / (kappa(m) * kappa(d - m));
  double mean = 0.0;
  for (double v : vols) mean += v;
  mean /= static_cast<double>(num_rotations);
  double var = 0.0;
  for (double v : vols) var += (v - mean) * (v - mean);
  var = num_rotations > 1 ? var / (num_rotations - 1) : 0.0;
  IntrinsicVolumeEstimate est;
  est.m = m;
  est.value = c * mean;
  est.std_error = c * std::sqrt(var / static_cast<double>(num_rotations));
  est.method = IntrinsicVolumeEstimate::Method::KubotaMC;
  return est;
}

double distance_to(const Polytope& p, const double* x) {
  const int d = p.dim();
  if (p.vertex_count() == 1) return lin::dist(x, p.vertex(0), d);
  if (p.full_dimensional() && !p.facets().empty()) {
    const double slack = 1e-12 * polytope_scale(p);
    if (inside_by_facets(p, x, slack)) return 0.0;
    if (d == 2) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& f : p.facets())
        best = std::min(best, point_segment_dist(x, p.vertex(f.vertices[0]),
                                                 p.vertex(f.vertices[1]), 2));
      return best;
    }
    if (d == 3) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& f : p.facets())
        best = std::min(
            best, point_triangle_dist(x, p.vertex(f.vertices[0]),
                                      p.vertex(f.vertices[1]),
                                      p.vertex(f.vertices[2])));
      return best;
    }
  }
  return lin::dist_to_convex_hull(x, p.vertices().data(), p.vertex_count(), d);
}

double hausdorff_distance(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("dimension mismatch");
  double best = 0.0;
  for (std::int64_t i = 0; i < p.vertex_count(); ++i)
    best = std::max(best, distance_to(q, p.vertex(i)));
  for (std::int64_t i = 0; i < q.vertex_count(); ++i)
    best = std::max(best, distance_to(p, q.vertex(i)));
  return best;
}

std::pair<double, double> steiner_polynomial_check(const Polytope& p,
                                                   double rho,
                                                   std::int64_t mc_points,
                                                   StreamKey key) {
  const int d = p.dim();
  if (!p.full_dimensional())
    throw std::invalid_argument("steiner check needs a full-dimensional body");
  if (rho < 0) throw std::invalid_argument("rho must be >= 0");
  if (mc_points < 1) throw std::invalid_argument("mc_points must be >= 1");

  std::vector<double> lo(d, 0.0), hi(d, 0.0);
  for (std::int64_t i = 0; i < p.vertex_count(); ++i)
    for (int j = 0; j < d; ++j) {
      const double v = p.vertex(i)[j];
      if (i == 0 || v < lo[j]) lo[j] = v;
      if (i == 0 || v > hi[j]) hi[j] = v;
    }
  double box_vol = 1.0;
  for (int j = 0; j < d; ++j) {
    lo[j] -= rho;
    hi[j] += rho;
    box_vol *= hi[j] - lo[j];
  }
  std::vector<unsigned char> hit(mc_points, 0);
  par::for_index(mc_points, [&](std::int64_t i) {
    Rng rng(key.derived(static_cast<std::uint64_t>(i)));
    std::vector<double> x(d);
    for (int j = 0; j < d; ++j) x[j] = rng.next_uniform(lo[j], hi[j]);
    hit[i] = distance_to(p, x.data()) <= rho ? 1 : 0;
  });
  std::int64_t hits = 0;
  for (unsigned char h : hit) hits += h;
  const double lhs =
      box_vol * static_cast<double>(hits) / static_cast<double>(mc_points);

  const McControls controls{1 << 16, 4096};
  double rhs = 0.0;
  for (int m = 0; m <= d; ++m) {
    const double vm =
        intrinsic_volume(p, m, VmMethod::Auto, controls, key.derived(1ull << 40))
            .value;
    rhs += std::pow(rho, d - m) * kappa(d - m) * vm;
  }
  return {lhs, rhs};
}

bool has_exact_vm(int d, int m) { return m == 0 || m >= d - 1; }

IntrinsicVolumeEstimate intrinsic_volume(const Polytope& p, int m,
                                         VmMethod method,
                                         const McControls& controls,
                                         StreamKey key) {
  const int d = p.dim();
  if (m < 0 || m > d) throw std::invalid_argument("m must be in [0, d]");
  IntrinsicVolumeEstimate est;
  est.m = m;
  if (m == 0) {
    est.value = 1.0;
    return est;
  }
  const bool degenerate = !p.full_dimensional();
  switch (method) {
    case VmMethod::Exact:
      if (degenerate && m == 1)
        return mean_width_and_v1(p, controls.sphere_directions, key);
      if (!has_exact_vm(d, m))
        throw std::invalid_argument("no exact V_m routine for this (d, m)");
      if (m == d) {
        est.value = volume(p);
        return est;
      }
      if (m == d - 1 && d >= 2) {
        if (d == 2) return mean_width_and_v1(p, controls.sphere_directions, key);
        est.value = surface_area_half(p);
        return est;
      }
      throw std::invalid_argument("no exact V_m routine for this (d, m)");
    case VmMethod::Sphere:
      if (m != 1)
        throw std::invalid_argument("sphere quadrature only estimates V_1");
      return mean_width_and_v1(p, controls.sphere_directions, key);
    case VmMethod::Kubota:
      return kubota_vm(p, m, controls.rotations, key);
    case VmMethod::Auto:
      break;
  }
  if (degenerate) {
    if (m == 1) return mean_width_and_v1(p, controls.sphere_directions, key);
    if (m == d) {
      est.value = 0.0;
      return est;
    }
    return kubota_vm(p, m, controls.rotations, key);
  }
  if (m == d) {
    est.value = volume(p);
    return est;
  }
  if (m == d - 1 && d >= 3) {
    est.value = surface_area_half(p);
    return est;
  }
  if (m == 1) return mean_width_and_v1(p, controls.sphere_directions, key);
  return kubota_vm(p, m, controls.rotations, key);
}

void write_polytope(std::ostream& os, const Polytope& p) {
  os << p.dim() << ' ' << p.vertex_count() << '\n';
  char buf[32];
  for (std::int64_t i = 0; i < p.vertex_count(); ++i) {
    for (int j = 0; j < p.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", p.vertex(i)[j]);
      os << (j ? " " : "") << buf;
    }
    os << '\n';
  }
}

Polytope read_polytope(std::istream& is) {
  int d = 0;
  std::int64_t n = 0;
  if (!(is >> d >> n) || d < 1 || n < 1)
    throw std::invalid_argument("malformed polytope header");
  std::vector<double> pts(static_cast<std::size_t>(n) * d);
  for (auto& v : pts)
    if (!(is >> v)) throw std::invalid_argument("malformed polytope vertex");
  return convex_hull(pts, d);
}

std::string to_text(const Polytope& p) {
  std::ostringstream os;
  write_polytope(os, p);
  return os.str();
}

Polytope from_text(const std::string& text) {
  std::istringstream is(text);
  return read_polytope(is);
}

}  // namespace hullwalk::geom
