#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chiac::detail {

inline auto thread_count(int requested, std::size_t work) -> int
{
    int hw = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    int threads = requested > 0 ? requested : hw;
    return static_cast<int>(std::max<std::size_t>(1, std::min<std::size_t>(threads, work)));
}

/// Runs fn(i) for i in 0..count-1 on up to `requested` threads (0 means one
/// per hardware thread). The first exception is rethrown after joining.
template <typename Fn>
auto parallel_for(std::size_t count, int requested, Fn && fn) -> void
{
    int threads = thread_count(requested, count);
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        });
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace chiac::detail
