#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamqaoa {

namespace detail {
inline int& worker_override() {
    static int value = 0;
    return value;
}
}  // namespace detail

// Worker count used by parallel loops. Resolution order: explicit
// set_worker_count(), the HAMQAOA_WORKERS environment variable, then the
// OpenMP default. Always >= 1.
inline int worker_count() {
    if (detail::worker_override() > 0) return detail::worker_override();
    if (const char* env = std::getenv("HAMQAOA_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return 1;
#endif
}

inline void set_worker_count(int workers) {
    detail::worker_override() = workers > 0 ? workers : 0;
}

// Fixed chunk size for deterministic reductions. Partial sums are computed
// per chunk and folded in a fixed pairwise tree, so the result depends on the
// chunk size but not on how many workers ran the chunks.
inline constexpr std::size_t kReductionChunk = 4096;

template <typename T, typename F>
T chunked_sum(std::size_t n, F&& term, std::size_t chunk = kReductionChunk) {
    if (n == 0) return T{};
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<T> partial(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    for (std::size_t width = 1; width < nchunks; width *= 2)
        for (std::size_t i = 0; i + width < nchunks; i += 2 * width)
            partial[i] += partial[i + width];
    return partial[0];
}

}  // namespace hamqaoa
