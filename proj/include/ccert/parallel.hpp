#pragma once

#include <cstdint>
#include <utility>

#ifdef CCERT_OPENMP
#include <omp.h>
#endif

namespace ccert {

// Execution mode for the data-parallel kernels. Every kernel writes results
// into pre-sized slots indexed by iteration, so serial and parallel runs
// produce identical values; the serial path is the reference used in tests.
enum class Exec { serial, parallel };

template <typename F>
void par_for(Exec exec, std::int64_t n, F&& body) {
#ifdef CCERT_OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  (void)exec;
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#ifdef CCERT_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ccert
