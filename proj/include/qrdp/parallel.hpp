#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrdp {

// Batch evaluations (sweeps, random-trial scans, per-round task budgets) run
// through this switch. The serial path is the reference; the OpenMP path must
// produce identical bytes, which holds as long as fn(i) writes only to slot i.
enum class ExecMode { serial, openmp };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
  return ExecMode::openmp;
#else
  return ExecMode::serial;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

template <typename Fn>
void for_each_index(std::size_t n, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::openmp) {
    // Exceptions may not unwind out of a parallel region; park the first one
    // and rethrow after the join. Chunked dynamic schedule: cells range from
    // closed-form arithmetic to eigensolves, and tiny cells would otherwise
    // drown in dispatch overhead.
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 32)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(qrdp_for_each_index_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace qrdp
