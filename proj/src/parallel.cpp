#include "tamearith/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tamearith::parallel {

namespace {
#ifdef _OPENMP
bool g_enabled = true;
#else
bool g_enabled = false;
#endif
} // namespace

bool enabled() { return g_enabled; }

void set_enabled(bool on) {
#ifdef _OPENMP
    g_enabled = on;
#else
    (void)on;
    g_enabled = false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    if (!g_enabled || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<size_t>(i));
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
#else
    for (size_t i = 0; i < n; ++i) body(i);
#endif
}

} // namespace tamearith::parallel
