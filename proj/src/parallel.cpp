#include "qcorr/parallel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcorr {

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

void run_indexed(ExecMode mode, std::size_t n, void (*fn)(void*, std::size_t), void* ctx) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel && n > 1) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(ctx, static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(ctx, i);
}

} // namespace detail

} // namespace qcorr
