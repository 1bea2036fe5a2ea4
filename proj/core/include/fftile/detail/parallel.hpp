#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace fftile::detail {

/// Runs fn(i) for i in [0, n), splitting the range over `threads`
/// workers. Each index must be independent of the others, so results
/// are identical for every thread count.
template <typename Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = static_cast<int>(n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        std::int64_t lo = n * t / threads;
        std::int64_t hi = n * (t + 1) / threads;
        pool.emplace_back([lo, hi, &fn] {
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace fftile::detail
