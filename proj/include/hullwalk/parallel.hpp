#pragma once

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hullwalk::par {

// Global switch between the OpenMP kernels and their serial reference path.
// Results are identical either way: loop bodies only write to index-owned
// slots and reductions happen afterwards in fixed index order.
namespace detail {
inline std::atomic<bool>& serial_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}
}  // namespace detail

inline void set_serial(bool on) { detail::serial_flag().store(on); }
inline bool serial_mode() { return detail::serial_flag().load(); }

inline void set_workers(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int workers() {
#ifdef _OPENMP
  return serial_mode() ? 1 : omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void for_index(std::int64_t count, F&& body) {
#ifdef _OPENMP
  if (!serial_mode() && count > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
#endif
  for (std::int64_t i = 0; i < count; ++i) body(i);
}

// Serial twin kept callable by tests and the benchmark regardless of the
// global switch.
template <class F>
void for_index_serial(std::int64_t count, F&& body) {
  for (std::int64_t i = 0; i < count; ++i) body(i);
}

}  // namespace hullwalk::par
