#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace lsym::cli {

int default_jobs();

// Runs work(i) for i in [0, count) on up to `jobs` threads and hands results to sink in index order.
// The sink is called under a lock, so it never runs concurrently with itself. The first exception
// thrown by work stops the remaining cases and is rethrown to the caller once all threads finish.
template <class Result>
void run_ordered(std::size_t count, int jobs, const std::function<Result(std::size_t)>& work,
                 const std::function<void(std::size_t, Result&&)>& sink) {
    std::vector<std::optional<Result>> slots(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex lock;
    std::size_t flushed = 0;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            if (failed.load()) return;
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                Result r = work(i);
                std::lock_guard<std::mutex> g(lock);
                slots[i].emplace(std::move(r));
                while (flushed < count && slots[flushed]) {
                    sink(flushed, std::move(*slots[flushed]));
                    slots[flushed].reset();
                    ++flushed;
                }
            } catch (...) {
                std::lock_guard<std::mutex> g(lock);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace lsym::cli
