#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace acyl {

// Index-space parallel for. Results must be written to pre-sized slots so the
// outcome is identical to the serial loop; workers <= 1 runs the plain loop
// (the serial reference used by tests and the benchmark).
template <typename Fn>
void parallel_for(size_t n, int workers, Fn&& fn) {
#ifdef _OPENMP
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<size_t>(i));
        return;
    }
#else
    (void)workers;
#endif
    for (size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace acyl
