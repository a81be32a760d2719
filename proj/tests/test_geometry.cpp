#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "hullwalk/geometry.hpp"
#include "hullwalk/linalg.hpp"
#include "hullwalk/rng.hpp"

using namespace hullwalk;
using geom::Polytope;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> unit_square() { return {0, 0, 1, 0, 1, 1, 0, 1}; }

std::vector<double> box3(double a, double b, double c) {
  std::vector<double> pts;
  for (int i = 0; i < 8; ++i) {
    pts.push_back((i & 1) * a);
    pts.push_back(((i >> 1) & 1) * b);
    pts.push_back(((i >> 2) & 1) * c);
  }
  return pts;
}

std::vector<double> sphere_points(int d, int n, std::uint64_t seed) {
  Rng rng(seed, 11);
  std::vector<double> pts(static_cast<std::size_t>(n) * d);
  for (int i = 0; i < n; ++i)
    lin::unit_sphere_direction(d, rng,
                               pts.data() + static_cast<std::size_t>(i) * d);
  return pts;
}

std::vector<double> random_points(int d, int n, std::uint64_t seed) {
  Rng rng(seed, 12);
  std::vector<double> pts(static_cast<std::size_t>(n) * d);
  for (auto& x : pts) x = rng.next_gaussian();
  return pts;
}

std::set<std::vector<double>> vertex_set(const Polytope& p) {
  std::set<std::vector<double>> s;
  for (std::int64_t i = 0; i < p.vertex_count(); ++i)
    s.insert(std::vector<double>(p.vertex(i), p.vertex(i) + p.dim()));
  return s;
}

void check_polytope_invariants(const Polytope& p) {
  if (!p.full_dimensional() || p.dim() < 2) return;
  double scale = 1.0;
  for (double v : p.vertices()) scale = std::max(scale, std::fabs(v));
  for (const auto& f : p.facets()) {
    CHECK(std::fabs(lin::norm(f.normal.data(), p.dim()) - 1.0) < 1e-12);
    for (std::int64_t i = 0; i < p.vertex_count(); ++i)
      CHECK(lin::dot(f.normal.data(), p.vertex(i), p.dim()) <=
            f.offset + 1e-9 * scale);
  }
}

double exact_vm(const Polytope& p, int m) {
  return geom::intrinsic_volume(p, m, geom::VmMethod::Exact, {}, {1, 1}).value;
}

Polytope scaled(const Polytope& p, double a) {
  std::vector<double> pts = p.vertices();
  for (auto& x : pts) x *= a;
  return geom::convex_hull(pts, p.dim());
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("ball constants") {
  CHECK(geom::kappa(2) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(geom::kappa(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(geom::kappa(0) == doctest::Approx(1.0));
  CHECK(geom::kappa(1) == doctest::Approx(2.0));
  for (int d = 1; d <= 8; ++d) CHECK(geom::varpi(d) == d * geom::kappa(d));
}

TEST_CASE("hull drops strict interior points") {
  const std::vector<double> pts = {0, 0, 1, 0, 0, 1, 0.2, 0.2};
  const Polytope p = geom::convex_hull(pts, 2);
  CHECK(p.vertex_count() == 3);
  CHECK(p.degenerate_rank() == 2);
  const auto vs = vertex_set(p);
  CHECK(vs.count({0, 0}));
  CHECK(vs.count({1, 0}));
  CHECK(vs.count({0, 1}));
  check_polytope_invariants(p);
}

TEST_CASE("hull of two points is a rank-1 segment") {
  const Polytope p = geom::convex_hull({0, 0, 1, 1}, 2);
  CHECK(p.degenerate_rank() == 1);
  CHECK(p.vertex_count() == 2);
  CHECK(p.facets().empty());
}

TEST_CASE("hull error cases") {
  CHECK_THROWS_WITH_AS(geom::convex_hull(std::vector<double>{}, 2),
                       "no points", std::invalid_argument);
  CHECK_THROWS_WITH_AS(geom::convex_hull({0.0, std::nan("")}, 2),
                       "invalid coordinate", std::invalid_argument);
}

TEST_CASE("hull volume of uniform cube sample vs rejection oracle") {
  // 1000 uniform points in the unit cube: the hull volume must sit between
  // 0.5 and 1, and agree with rejection sampling on the same point set.
  Rng rng(101, 0);
  std::vector<double> pts(3000);
  for (auto& x : pts) x = rng.next_unit();
  const Polytope p = geom::convex_hull(pts, 3);
  const double vol = geom::volume(p);
  CHECK(vol < 1.0);
  CHECK(vol > 0.5);
  std::int64_t hits = 0;
  const std::int64_t samples = 200000;
  for (std::int64_t i = 0; i < samples; ++i) {
    double x[3] = {rng.next_unit(), rng.next_unit(), rng.next_unit()};
    hits += geom::distance_to(p, x) == 0.0 ? 1 : 0;
  }
  const double mc = static_cast<double>(hits) / samples;
  CHECK(vol == doctest::Approx(mc).epsilon(0.02));
  check_polytope_invariants(p);
}

TEST_CASE("support function") {
  const Polytope sq = geom::convex_hull(unit_square(), 2);
  const double e1[2] = {1, 0};
  CHECK(geom::support_function(sq, e1) == doctest::Approx(1.0));
  const double diag[2] = {1, 1};
  CHECK(geom::support_function(sq, diag) == doctest::Approx(2.0));
  const double zero[2] = {0, 0};
  CHECK_THROWS_AS(geom::support_function(sq, zero), std::invalid_argument);

  // Segment [0, mu]: support is max(0, <theta, mu>).
  const std::vector<double> mu = {2, -1};
  const Polytope seg = geom::convex_hull({0, 0, mu[0], mu[1]}, 2);
  Rng rng(7, 1);
  for (int i = 0; i < 100; ++i) {
    double theta[2];
    lin::unit_sphere_direction(2, rng, theta);
    const double want = std::max(0.0, theta[0] * mu[0] + theta[1] * mu[1]);
    CHECK(geom::support_function(seg, theta) == doctest::Approx(want));
  }

  // Dense polytope approximation of the ball: support close to 1.
  const Polytope ball = geom::convex_hull(sphere_points(3, 4000, 5), 3);
  for (int i = 0; i < 20; ++i) {
    double theta[3];
    lin::unit_sphere_direction(3, rng, theta);
    CHECK(geom::support_function(ball, theta) ==
          doctest::Approx(1.0).epsilon(0.02));
  }
}

TEST_CASE("mean width and V1") {
  const Polytope sq = geom::convex_hull(unit_square(), 2);
  const auto v1 = geom::mean_width_and_v1(sq, 1, {1, 2});
  CHECK(v1.value == doctest::Approx(2.0).epsilon(1e-12));  // half perimeter
  CHECK(v1.std_error == 0.0);
  CHECK(v1.method == geom::IntrinsicVolumeEstimate::Method::Exact);

  // Segment [0, mu]: V_1 is its length.
  const Polytope seg = geom::convex_hull({0, 0, 3, 4}, 2);
  CHECK(geom::mean_width_and_v1(seg, 1, {1, 3}).value == doctest::Approx(5.0));

  // Ball approximation in R^3: V_1(B^3) = 3 kappa_3 / kappa_2 = 4.
  const Polytope ball = geom::convex_hull(sphere_points(3, 20000, 6), 3);
  const auto est = geom::mean_width_and_v1(ball, 20000, {2, 4});
  CHECK(est.method == geom::IntrinsicVolumeEstimate::Method::SphereQuadrature);
  CHECK(std::fabs(est.value - 4.0) < 3.0 * est.std_error + 0.02 * 4.0);
}

TEST_CASE("steiner point") {
  const Polytope sq = geom::convex_hull(unit_square(), 2);
  const auto p = geom::steiner_point(sq, 20000, {3, 5});
  for (int j = 0; j < 2; ++j)
    CHECK(std::fabs(p.value[j] - 0.5) <= 3.0 * p.std_error[j]);

  const std::vector<double> mu = {1, 2};
  const Polytope seg = geom::convex_hull({0, 0, mu[0], mu[1]}, 2);
  const auto ps = geom::steiner_point(seg, 40000, {4, 6});
  for (int j = 0; j < 2; ++j)
    CHECK(std::fabs(ps.value[j] - mu[j] / 2) <= 3.0 * ps.std_error[j]);

  // Centrally symmetric body centered at c: cross-polytope around (1,1,1).
  std::vector<double> oct;
  const double c[3] = {1, 1, 1};
  for (int j = 0; j < 3; ++j)
    for (int sign : {-1, 1}) {
      double v[3] = {c[0], c[1], c[2]};
      v[j] += sign;
      oct.insert(oct.end(), v, v + 3);
    }
  const Polytope p8 = geom::convex_hull(oct, 3);
  const auto pc = geom::steiner_point(p8, 40000, {5, 7});
  for (int j = 0; j < 3; ++j)
    CHECK(std::fabs(pc.value[j] - c[j]) <= 3.0 * pc.std_error[j] + 1e-9);
}

TEST_CASE("volume") {
  CHECK(geom::volume(geom::convex_hull(box3(1, 1, 1), 3)) ==
        doctest::Approx(1.0));
  // Simplex conv{0, e_1, ..., e_d} has volume 1/d!.
  for (int d = 2; d <= 4; ++d) {
    std::vector<double> pts((d + 1) * static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i)
      pts[static_cast<std::size_t>(i + 1) * d + i] = 1.0;
    double fact = 1.0;
    for (int i = 2; i <= d; ++i) fact *= i;
    CHECK(geom::volume(geom::convex_hull(pts, d)) ==
          doctest::Approx(1.0 / fact).epsilon(1e-10));
  }
  CHECK(geom::volume(geom::convex_hull({0, 0, 1, 1}, 2)) == 0.0);

  // Random polytope volume against rejection sampling in the bounding box.
  const Polytope p = geom::convex_hull(random_points(3, 60, 42), 3);
  double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
  for (std::int64_t i = 0; i < p.vertex_count(); ++i)
    for (int j = 0; j < 3; ++j) {
      lo[j] = std::min(lo[j], p.vertex(i)[j]);
      hi[j] = std::max(hi[j], p.vertex(i)[j]);
    }
  Rng rng(77, 0);
  std::int64_t hits = 0;
  const std::int64_t samples = 1000000;
  for (std::int64_t i = 0; i < samples; ++i) {
    double x[3];
    for (int j = 0; j < 3; ++j) x[j] = rng.next_uniform(lo[j], hi[j]);
    hits += geom::distance_to(p, x) == 0.0 ? 1 : 0;
  }
  double boxvol = 1.0;
  for (int j = 0; j < 3; ++j) boxvol *= hi[j] - lo[j];
  const double mc = boxvol * static_cast<double>(hits) / samples;
  CHECK(geom::volume(p) == doctest::Approx(mc).epsilon(0.01));
}

TEST_CASE("surface area half") {
  CHECK(geom::surface_area_half(geom::convex_hull(box3(1, 1, 1), 3)) ==
        doctest::Approx(3.0));
  CHECK(geom::surface_area_half(geom::convex_hull(unit_square(), 2)) ==
        doctest::Approx(2.0));
  CHECK(geom::surface_area_half(geom::convex_hull(box3(1, 2, 3), 3)) ==
        doctest::Approx(11.0));
  CHECK(geom::surface_area_half(geom::convex_hull({0, 0, 1, 1}, 2)) == 0.0);
}

TEST_CASE("box intrinsic volumes") {
  const auto v = geom::box_intrinsic_volumes({1, 2, 3});
  CHECK(v[0] == 1.0);
  CHECK(v[1] == doctest::Approx(6.0));
  CHECK(v[2] == doctest::Approx(11.0));
  CHECK(v[3] == doctest::Approx(6.0));
  const auto w = geom::box_intrinsic_volumes({1, 1});
  CHECK(w[1] == doctest::Approx(2.0));
  CHECK(w[2] == doctest::Approx(1.0));
  const auto z = geom::box_intrinsic_volumes({0, 5});
  CHECK(z[1] == doctest::Approx(5.0));
  CHECK(z[2] == 0.0);
}

TEST_CASE("kubota estimator") {
  const Polytope sq = geom::convex_hull(unit_square(), 2);
  const auto v1 = geom::kubota_vm(sq, 1, 20000, {6, 8});
  CHECK(std::fabs(v1.value - 2.0) <= 3.0 * v1.std_error);

  // m = d short-circuits to the exact volume.
  const auto v2 = geom::kubota_vm(sq, 2, 4, {6, 9});
  CHECK(v2.value == doctest::Approx(1.0));
  CHECK(v2.std_error == 0.0);

  const Polytope box = geom::convex_hull(box3(1, 2, 3), 3);
  const auto b2 = geom::kubota_vm(box, 2, 4096, {6, 10});
  CHECK(std::fabs(b2.value - 11.0) <= 3.0 * b2.std_error);
  const auto b1 = geom::kubota_vm(box, 1, 4096, {6, 11});
  CHECK(std::fabs(b1.value - 6.0) <= 3.0 * b1.std_error);
}

TEST_CASE("kubota agrees with exact V_m on random polytopes") {
  for (std::uint64_t seed : {1ull, 2ull}) {
    const Polytope p = geom::convex_hull(random_points(3, 40, seed), 3);
    const auto k2 = geom::kubota_vm(p, 2, 8192, {7, seed});
    const double exact = geom::surface_area_half(p);
    CHECK(std::fabs(k2.value - exact) <= 3.0 * k2.std_error);
  }
}

TEST_CASE("hausdorff distance") {
  // Concentric ball approximations with radii 1 and 2.
  auto b1 = sphere_points(2, 600, 21);
  auto b2 = b1;
  for (auto& x : b2) x *= 2.0;
  const Polytope p1 = geom::convex_hull(b1, 2);
  const Polytope p2 = geom::convex_hull(b2, 2);
  CHECK(geom::hausdorff_distance(p1, p2) == doctest::Approx(1.0).epsilon(0.01));

  const Polytope sq = geom::convex_hull(unit_square(), 2);
  std::vector<double> moved = unit_square();
  for (std::size_t i = 0; i < moved.size(); i += 2) moved[i] += 3.0;
  const Polytope sq2 = geom::convex_hull(moved, 2);
  CHECK(geom::hausdorff_distance(sq, sq2) ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(geom::hausdorff_distance(sq, sq) == doctest::Approx(0.0));
}

TEST_CASE("hausdorff metric axioms and hull contraction") {
  Rng rng(33, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 2);
    const auto xs = random_points(d, 12, 1000 + trial);
    const auto ys = random_points(d, 12, 2000 + trial);
    const auto zs = random_points(d, 12, 3000 + trial);
    const Polytope px = geom::convex_hull(xs, d);
    const Polytope py = geom::convex_hull(ys, d);
    const Polytope pz = geom::convex_hull(zs, d);
    const double dxy = geom::hausdorff_distance(px, py);
    const double dyx = geom::hausdorff_distance(py, px);
    const double dxz = geom::hausdorff_distance(px, pz);
    const double dzy = geom::hausdorff_distance(pz, py);
    CHECK(dxy == dyx);               // symmetry (same computation both ways)
    CHECK(dxy <= dxz + dzy + 1e-9);  // triangle inequality
    CHECK(dxy > 0.0);                // distinct random polytopes

    // dist_H(conv X, conv Y) <= dist_H(X, Y) on the point sets.
    double set_dist = 0.0;
    for (int i = 0; i < 12; ++i) {
      double best = 1e300;
      for (int j = 0; j < 12; ++j)
        best =
            std::min(best, lin::dist(xs.data() + i * d, ys.data() + j * d, d));
      set_dist = std::max(set_dist, best);
    }
    for (int i = 0; i < 12; ++i) {
      double best = 1e300;
      for (int j = 0; j < 12; ++j)
        best =
            std::min(best, lin::dist(ys.data() + i * d, xs.data() + j * d, d));
      set_dist = std::max(set_dist, best);
    }
    CHECK(dxy <= set_dist + 1e-9);
  }
}

TEST_CASE("steiner polynomial check") {
  const Polytope sq = geom::convex_hull(unit_square(), 2);
  const auto [lhs, rhs] = geom::steiner_polynomial_check(sq, 1.0, 1000000, {8, 1});
  CHECK(rhs == doctest::Approx(kPi + 5.0).epsilon(1e-9));
  CHECK(std::fabs(lhs - rhs) / rhs < 0.01);

  // rho = 0 collapses both sides to the volume.
  const auto [l0, r0] = geom::steiner_polynomial_check(sq, 0.0, 1000, {8, 2});
  CHECK(l0 == doctest::Approx(1.0));
  CHECK(r0 == doctest::Approx(1.0));
}

TEST_CASE("stadium area of a dilated segment") {
  // A segment is not full-dimensional, so drive the lhs estimate directly.
  const Polytope seg = geom::convex_hull({0, 0, 1, 0}, 2);
  Rng rng(9, 9);
  std::int64_t hits = 0;
  const std::int64_t samples = 400000;
  const double areabox = 3.0 * 2.0;  // [-1,2] x [-1,1]
  for (std::int64_t i = 0; i < samples; ++i) {
    double x[2] = {rng.next_uniform(-1, 2), rng.next_uniform(-1, 1)};
    hits += geom::distance_to(seg, x) <= 1.0 ? 1 : 0;
  }
  const double area = areabox * static_cast<double>(hits) / samples;
  CHECK(area == doctest::Approx(2.0 + kPi).epsilon(0.01));
}

TEST_CASE("steiner polynomial on random polytopes in d = 2, 3") {
  for (int d : {2, 3}) {
    const Polytope p = geom::convex_hull(random_points(d, 30, 50 + d), d);
    const auto [lhs, rhs] = geom::steiner_polynomial_check(
        p, 0.7, 1000000, {10, static_cast<std::uint64_t>(d)});
    CHECK(std::fabs(lhs - rhs) / rhs < 0.01);
  }
}

TEST_CASE("hull idempotence") {
  Rng rng(64, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);
    const int n = 5 + static_cast<int>(rng.next_u64() % 60);
    const auto pts = random_points(d, n, 9000 + trial);
    const Polytope p = geom::convex_hull(pts, d);
    const Polytope q = geom::convex_hull(p.vertices(), d);
    CHECK(vertex_set(p) == vertex_set(q));
    check_polytope_invariants(p);
  }
}

TEST_CASE("monotonicity of exact intrinsic volumes under point addition") {
  for (int d : {2, 3}) {
    const auto pts = random_points(d, 80, 70 + d);
    std::vector<double> subset(pts.begin(), pts.begin() + 40 * d);
    const Polytope small = geom::convex_hull(subset, d);
    const Polytope big = geom::convex_hull(pts, d);
    for (int m : {d - 1, d})
      CHECK(exact_vm(small, m) <= exact_vm(big, m) + 1e-10);
    if (d == 2) CHECK(exact_vm(small, 1) <= exact_vm(big, 1) + 1e-10);
  }
}

TEST_CASE("scaling homogeneity V_m(aP) = a^m V_m(P)") {
  const Polytope p = geom::convex_hull(random_points(3, 30, 81), 3);
  const double a = 2.5;
  const Polytope pa = scaled(p, a);
  for (int m : {2, 3})
    CHECK(exact_vm(pa, m) ==
          doctest::Approx(std::pow(a, m) * exact_vm(p, m)).epsilon(1e-9));
  const auto v1 = geom::mean_width_and_v1(p, 4096, {12, 0});
  const auto v1a = geom::mean_width_and_v1(pa, 4096, {12, 0});
  CHECK(std::fabs(v1a.value - a * v1.value) <=
        3.0 * (a * v1.std_error + v1a.std_error));
  const auto sp = geom::steiner_point(p, 8192, {12, 1});
  const auto spa = geom::steiner_point(pa, 8192, {12, 1});
  for (int j = 0; j < 3; ++j)
    CHECK(std::fabs(spa.value[j] - a * sp.value[j]) <=
          3.0 * (a * sp.std_error[j] + spa.std_error[j]));
}

TEST_CASE("ball intrinsic volumes within 2 percent") {
  // Dense polytope approximations reproduce V_m(B^d) = C(d,m) k_d / k_{d-m}.
  auto binom = [](int n, int k) {
    double v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
  };
  for (int d : {2, 3}) {
    const Polytope ball =
        geom::convex_hull(sphere_points(d, 12000, 90 + d), d);
    for (int m = 1; m <= d; ++m) {
      const double want = binom(d, m) * geom::kappa(d) / geom::kappa(d - m);
      const auto est = geom::intrinsic_volume(
          ball, m, geom::VmMethod::Auto, {1 << 15, 2048},
          {13, static_cast<std::uint64_t>(d * 8 + m)});
      CHECK(std::fabs(est.value - want) / want < 0.02);
    }
  }
}

TEST_CASE("facet distance agrees with the support-descent route") {
  Rng rng(140, 0);
  for (int d : {2, 3}) {
    const Polytope p = geom::convex_hull(random_points(d, 25, 500 + d), d);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x(d);
      for (auto& v : x) v = 3.0 * rng.next_gaussian();
      const double exact = geom::distance_to(p, x.data());
      const double descent = lin::dist_to_convex_hull(
          x.data(), p.vertices().data(), p.vertex_count(), d);
      CHECK(std::fabs(exact - descent) < 1e-9);
    }
  }
}

TEST_CASE("serialization round trip") {
  const Polytope p = geom::convex_hull(random_points(3, 25, 123), 3);
  const Polytope q = geom::from_text(geom::to_text(p));
  CHECK(vertex_set(p) == vertex_set(q));
  CHECK(geom::volume(p) == doctest::Approx(geom::volume(q)).epsilon(1e-12));
}

TEST_CASE("degenerate input keeps rank annotation") {
  // Planar point set embedded in R^3: z = 2x - y + 1.
  Rng rng(14, 2);
  std::vector<double> pts;
  for (int i = 0; i < 30; ++i) {
    const double a = rng.next_gaussian(), b = rng.next_gaussian();
    pts.push_back(a);
    pts.push_back(b);
    pts.push_back(2.0 * a - b + 1.0);
  }
  const Polytope p = geom::convex_hull(pts, 3);
  CHECK(p.degenerate_rank() == 2);
  CHECK(p.facets().empty());
  CHECK(geom::volume(p) == 0.0);
  // V_2 of the flat body via Kubota matches its intrinsic area: the map
  // (x,y) -> (x, y, 2x-y+1) scales areas by sqrt(det gram) = sqrt(6).
  std::vector<double> flat;
  for (std::int64_t i = 0; i < p.vertex_count(); ++i) {
    flat.push_back(p.vertex(i)[0]);
    flat.push_back(p.vertex(i)[1]);
  }
  const double area =
      geom::volume(geom::convex_hull(flat, 2)) * std::sqrt(6.0);
  const auto k2 = geom::kubota_vm(p, 2, 20000, {15, 3});
  CHECK(std::fabs(k2.value - area) <= 3.0 * k2.std_error + 0.01 * area);
}

TEST_SUITE_END();
