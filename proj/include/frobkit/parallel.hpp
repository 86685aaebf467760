#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace frobkit {

/// Runs body(i) for every i in [0, count) on up to `workers` threads. Items
/// are handed out dynamically; the first exception thrown by any item is
/// rethrown on the calling thread after all threads have joined.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count, std::memory_order_relaxed);
                return;
            }
        }
    };
    const unsigned spawned = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> threads;
    threads.reserve(spawned - 1);
    for (unsigned t = 1; t < spawned; ++t) threads.emplace_back(run);
    run();
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace frobkit
