#ifndef WEYL_PARALLEL_HPP
#define WEYL_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

namespace weyl {

/// Serial is the reference path; Parallel distributes independent cells over
/// OpenMP threads. Both must produce identical results.
enum class ExecPolicy { Serial, Parallel };

/// Caps OpenMP threads from WEYL_THREADS when set. Returns the thread count in use.
int configureThreads();

template <class Fn>
void parallelFor(ExecPolicy policy, std::size_t count, Fn&& fn) {
  if (policy == ExecPolicy::Serial || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr failure;
  std::mutex failureMutex;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < total; ++k) {
    try {
      fn(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failureMutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace weyl

#endif
