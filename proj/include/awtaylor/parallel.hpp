#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace awt {

/// Execution mode of the data-parallel kernels. `serial` is the reference
/// path; both modes produce bitwise identical results because reductions
/// are always carried out serially in index order.
enum class Exec { parallel, serial };

/// Runs body(i) for i in [0, n). In parallel mode the iterations are spread
/// over OpenMP threads; the first exception thrown by any iteration is
/// rethrown on the calling thread after the loop.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace awt
