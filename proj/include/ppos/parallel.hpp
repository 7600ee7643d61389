#pragma once

// Execution policy for the data-parallel kernels (order-matrix fill, Mobius
// accumulation, interval sweeps).  Every kernel computes exact integers whose
// combination is associative, so serial and parallel runs must produce
// identical results; tests rely on that.

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ppos {

enum class Exec { serial, parallel };

inline int thread_count(Exec e) {
#if defined(_OPENMP)
  return e == Exec::parallel ? omp_get_max_threads() : 1;
#else
  (void)e;
  return 1;
#endif
}

}  // namespace ppos
