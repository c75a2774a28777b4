// OpenMP helpers. Every parallel kernel has identical semantics to its
// serial reference: find-first returns the least satisfying index, counts
// and maxima are order-independent reductions.
#pragma once

#include <cstdint>
#include <functional>

namespace esgeo {

int max_threads();
void set_threads(int n);

// Least index in [0,n) satisfying pred, or -1. Scans fixed-size blocks so
// early hits terminate the search on all threads.
std::int64_t find_first_parallel(std::int64_t n, const std::function<bool(std::int64_t)>& pred);
std::int64_t find_first_serial(std::int64_t n, const std::function<bool(std::int64_t)>& pred);
std::int64_t find_first(std::int64_t n, const std::function<bool(std::int64_t)>& pred);

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace esgeo
