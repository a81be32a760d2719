// Compares the OpenMP kernels against their serial reference path and checks
// that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "hullwalk/estimators.hpp"
#include "hullwalk/geometry.hpp"
#include "hullwalk/limits.hpp"
#include "hullwalk/parallel.hpp"
#include "hullwalk/stable.hpp"

namespace {

double time_of(const std::function<double()>& fn, double* result) {
  const auto t0 = std::chrono::steady_clock::now();
  *result = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const char* name, const std::function<double()>& fn) {
  double serial_result = 0.0, parallel_result = 0.0;
  hullwalk::par::set_serial(true);
  const double ts = time_of(fn, &serial_result);
  hullwalk::par::set_serial(false);
  const double tp = time_of(fn, &parallel_result);
  const bool identical = serial_result == parallel_result;
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              name, ts, tp, ts / tp,
              identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  using namespace hullwalk;
  std::printf("hullwalk benchmark, %d worker thread(s)\n", par::workers());

  stable::StableLawSpec gauss;
  gauss.dim = 2;
  gauss.alpha = 2.0;
  gauss.structure = stable::Structure::Gaussian;
  gauss.sigma = {1, 0, 0, 1};

  report("mean V1, n=4000, 256 reps", [&] {
    return est::empirical_mean_vm(gauss, 4000, 1, 256, StreamKey{7, 1}).mean;
  });

  report("convolution, n=30000, m=2", [&] {
    return lim::sequence_convolution_limit(1.5, 2, 30000);
  });

  const geom::Polytope cube = geom::convex_hull(
      std::vector<double>{0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1,
                          1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1},
      3);
  report("steiner check, 4e5 samples", [&] {
    return geom::steiner_polynomial_check(cube, 0.5, 400000, StreamKey{7, 2})
        .first;
  });

  report("kubota V2 of cube, 2048 rot", [&] {
    return geom::kubota_vm(cube, 2, 2048, StreamKey{7, 3}).value;
  });
  return 0;
}
