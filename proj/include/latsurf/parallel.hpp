#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latsurf {

// Every parallel kernel in this project also runs serially; the serial path is
// the reference the OpenMP path is tested against. Results are deterministic
// in both modes: loop bodies write to disjoint indexed slots and reductions
// are performed in index order after the parallel region.
enum class Exec { Serial, Par };

template <class F>
void parallel_for(Exec exec, std::int64_t begin, std::int64_t end, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::Par) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = begin; i < end; ++i) body(i);
    return;
  }
#endif
  (void)exec;
  for (std::int64_t i = begin; i < end; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline double wall_time() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return 0.0;
#endif
}

}  // namespace latsurf
