#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace necksum {

inline int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for every i in [0, count). jobs == 1 is the serial reference
// path; jobs == 0 uses all available threads; jobs > 1 pins the team size.
// Cells must be independent; callers that aggregate do so into preallocated
// slots so output order never depends on scheduling. The first exception
// thrown by a cell is rethrown once the loop finishes.
template <typename Fn>
void for_each_cell(std::size_t count, int jobs, Fn&& fn) {
  if (count == 0) return;
#ifdef _OPENMP
  if (jobs != 1 && count > 1) {
    const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace necksum
