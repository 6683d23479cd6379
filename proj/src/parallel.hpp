#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

namespace vnum::detail {

// OpenMP loop over [0, n) that carries the first exception out of the region.
template <class Fn>
void parallel_for(std::int64_t n, bool enable, Fn&& fn) {
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic) if (enable)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace vnum::detail
