#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mwf::detail {

// Runs fn(i) for i in [0, n). Each index is written by exactly one worker,
// so results do not depend on the thread count. The first exception thrown
// by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([lo, hi, &fn, &err = errors[t]] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) fn(i);
                } catch (...) {
                    err = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace mwf::detail
