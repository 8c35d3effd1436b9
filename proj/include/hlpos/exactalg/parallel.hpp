#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hlpos::exactalg {

enum class Exec { serial, parallel };

// Runs body(i) for i in [0, count). With Exec::parallel the iterations are
// spread over OpenMP threads (dynamic schedule: per-column costs are uneven).
// The first exception thrown by any iteration is rethrown on the caller's
// thread once the loop has drained.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel && count > 1 && !omp_in_parallel()) {
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

// Sets the OpenMP team size; a no-op without OpenMP. Values <= 0 keep the
// runtime default.
void set_thread_count(int threads);
int max_threads();

}  // namespace hlpos::exactalg
