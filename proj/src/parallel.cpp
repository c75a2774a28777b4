#include "esgeo/parallel.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace esgeo {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

std::int64_t find_first_serial(std::int64_t n, const std::function<bool(std::int64_t)>& pred) {
    for (std::int64_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return -1;
}

std::int64_t find_first_parallel(std::int64_t n, const std::function<bool(std::int64_t)>& pred) {
#ifndef _OPENMP
    return find_first_serial(n, pred);
#else
    if (n < 4096 || omp_get_max_threads() == 1) return find_first_serial(n, pred);
    const std::int64_t block = 2048;
    std::atomic<std::int64_t> best(n);
    std::int64_t nblocks = (n + block - 1) / block;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        std::int64_t lo = b * block;
        if (lo >= best.load(std::memory_order_relaxed)) continue;
        std::int64_t hi = std::min(n, lo + block);
        for (std::int64_t i = lo; i < hi; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) break;
            if (pred(i)) {
                std::int64_t cur = best.load(std::memory_order_relaxed);
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    }
    std::int64_t r = best.load();
    return r == n ? -1 : r;
#endif
}

std::int64_t find_first(std::int64_t n, const std::function<bool(std::int64_t)>& pred) {
    return find_first_parallel(n, pred);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) body(i);
#else
    for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace esgeo
