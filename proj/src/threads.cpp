#include "rotorsym/threads.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotorsym {

namespace {

int omp_max() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int env_default() {
    if (const char* s = std::getenv("ROTORSYM_THREADS")) {
        const int n = std::atoi(s);
        if (n >= 1) return n < omp_max() ? n : omp_max();
    }
    return omp_max();
}

int g_override = 0;

} // namespace

int thread_cap() { return g_override >= 1 ? g_override : env_default(); }

void set_thread_cap(int n) { g_override = n >= 1 ? n : 0; }

bool parallel_enabled() { return thread_cap() > 1; }

} // namespace rotorsym
