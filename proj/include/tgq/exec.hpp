#pragma once

// Execution policy for the data-parallel verification kernels.  Every kernel
// has a serial reference path; the OpenMP path must produce bit-identical
// reports (witnesses are reduced to the lexicographically least one).

#include <cstddef>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tgq {

enum class Exec {
  Serial,
  Parallel,
};

inline int thread_count(Exec exec) {
#ifdef _OPENMP
  return exec == Exec::Parallel ? omp_get_max_threads() : 1;
#else
  (void)exec;
  return 1;
#endif
}

// Scans [0, count) and keeps the least finding under `less`.  The body maps
// an index to an optional finding; both execution paths return the same
// result because the parallel path reduces with the same order.
template <class W, class Fn, class Less>
std::optional<W> scan_min(std::size_t count, Exec exec, Fn&& fn, Less&& less) {
  std::optional<W> best;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::optional<W> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long i = 0; i < static_cast<long long>(count); ++i) {
        auto w = fn(static_cast<std::size_t>(i));
        if (w && (!local || less(*w, *local))) local = std::move(w);
      }
#pragma omp critical(tgq_scan_min)
      {
        if (local && (!best || less(*local, *best))) best = std::move(local);
      }
    }
    return best;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) {
    auto w = fn(i);
    if (w && (!best || less(*w, *best))) best = std::move(w);
  }
  return best;
}

}  // namespace tgq
