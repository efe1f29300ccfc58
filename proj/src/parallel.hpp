#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qssep::detail {

// Runs body(j) for j in [0, count) on up to `jobs` threads. Callers write
// results by index, so the outcome is independent of scheduling.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body body) {
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), count);
    if (workers <= 1) {
        for (std::size_t j = 0; j < count; ++j) body(j);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t j = next++; j < count; j = next++) {
                try {
                    body(j);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qssep::detail
