#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwalk {

// Below this many lattice sites the step kernel and reductions stay serial;
// thread startup costs more than the work.
inline constexpr std::ptrdiff_t kParallelMinSites = 4096;

// Reductions split their input into blocks of this size and add the block
// sums in index order, so results do not depend on the thread count.
inline constexpr std::ptrdiff_t kReductionBlock = 1024;

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace qwalk
