#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gdh {

enum class Execution { serial, parallel };

// fn(0) .. fn(count - 1). The parallel path hands indices out dynamically
// (task costs are very uneven); the first exception thrown by any index is
// rethrown after the loop.
template <class Fn>
void for_each_index(std::size_t count, Execution exec, int workers, Fn&& fn) {
  if (exec == Execution::serial || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::size_t k = 0; k < count; ++k) {
    try {
      fn(k);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  (void)workers;
  if (error) std::rethrow_exception(error);
}

}  // namespace gdh
