// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holoform::par {

inline bool enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Serial reference kernel: fn(i) for i in [0, n), results in index order.
template <typename F>
auto indexed_map_serial(std::size_t n, F&& fn)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

/// OpenMP kernel with the same contract as indexed_map_serial: results land
/// in index order, so the combined output is independent of thread count.
/// Exceptions are captured per index; the lowest-index one is rethrown.
template <typename F>
auto indexed_map(std::size_t n, F&& fn)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return out;
}

/// Parallel map over [0, n) folded serially in index order, holding at most
/// `block` results in flight. Used where per-index results are large.
template <typename F, typename Fold>
void blocked_map_fold(std::size_t n, std::size_t block, F&& fn, Fold&& fold) {
    if (block == 0) block = 1;
    for (std::size_t start = 0; start < n; start += block) {
        const std::size_t count = std::min(block, n - start);
        auto results = indexed_map(count, [&](std::size_t k) { return fn(start + k); });
        for (std::size_t k = 0; k < count; ++k) fold(start + k, std::move(results[k]));
    }
}

}  // namespace holoform::par
