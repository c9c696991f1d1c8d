#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quermass {

inline int default_workers() {
    if (const char* env = std::getenv("QUERMASS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(std::min(hc, 16u)) : 1;
}

// Runs fn(i) for i in [0, count) over contiguous blocks. Callers write
// results by index and reduce in index order afterwards, so the outcome is
// identical for any worker count. The first exception thrown by any worker is
// rethrown after all workers join.
template <typename Fn>
void parallel_for(size_t count, int workers, Fn&& fn) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<size_t>(count, 64))));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const size_t lo = w * chunk;
        const size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace quermass
