#pragma once

// Minimal fork-join helper for the embarrassingly parallel sweeps. The
// worker count is capped by GT_TOOLKIT_THREADS when that variable is set.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace gtsys {

/// Worker count: GT_TOOLKIT_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_cap();

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
/// The first exception thrown by any task is rethrown after all workers stop.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    static_assert(!std::is_same_v<R, bool>, "vector<bool> elements are not independently writable");
    std::vector<R> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_lock);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    const std::size_t workers = std::min(thread_cap(), n);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace gtsys
