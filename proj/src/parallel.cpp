#include "genchar/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genchar {

namespace {
std::atomic<int> g_workers{0};
}

void set_workers(int n) { g_workers.store(n < 0 ? 0 : n); }

int workers() {
    int w = g_workers.load();
#ifdef _OPENMP
    if (w == 0) return omp_get_max_threads();
    return w;
#else
    (void)w;
    return 1;
#endif
}

bool parallel_enabled() { return workers() > 1; }

} // namespace genchar
