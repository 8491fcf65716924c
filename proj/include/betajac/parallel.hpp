#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace betajac {

/// Run body(t) for t = 0..count-1, work-stealing over trial indices with up
/// to `threads` workers. Each trial must own its randomness (stream_id = t),
/// so the set of results never depends on the schedule. The first exception
/// thrown by any trial is rethrown after all workers stop.
inline void run_trials(std::size_t count, int threads,
                       const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(count, threads > 1 ? static_cast<std::size_t>(threads) : 1);
    if (workers <= 1) {
        for (std::size_t t = 0; t < count; ++t) body(t);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= count || failed.load()) return;
            try {
                body(t);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace betajac
