/**
 * @file parallel.hpp
 * @brief Process-wide worker count and an order-preserving parallel map.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lamlat {

namespace detail {
inline unsigned default_threads() {
    if (const char* env = std::getenv("LAMLAT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}
inline std::atomic<unsigned>& thread_setting() {
    static std::atomic<unsigned> threads{default_threads()};
    return threads;
}
}  // namespace detail

inline unsigned thread_count() { return detail::thread_setting().load(); }
inline void set_thread_count(unsigned n) { detail::thread_setting().store(std::max(1u, n)); }

/// Runs task(i) for i in [0, count) on up to thread_count() workers and
/// returns the results in index order, so output never depends on scheduling.
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& task) {
    std::vector<R> out(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = task(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    out[i] = task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace lamlat
