#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace mrcov {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// path that produces bit-identical results; tests compare the two.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void for_each_index(Exec exec, int n, F&& body) {
  if (exec == Exec::Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      body(i);
    }
    return;
#endif
  }
  for (int i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace mrcov
