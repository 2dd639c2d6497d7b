#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quatrace::cli {

/// Applies work(i) for i in [0, count) across up to jobs threads and returns
/// the results indexed by i, so output order never depends on scheduling.
/// The first worker exception, if any, is rethrown after the join.
template <typename T, typename WorkFn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, WorkFn&& work) {
    std::vector<T> results(count);
    if (count == 0) return results;
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = work(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = work(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> workers;
    unsigned n = std::min<std::size_t>(jobs, count);
    workers.reserve(n);
    for (unsigned t = 0; t < n; ++t) workers.emplace_back(run);
    for (std::thread& w : workers) w.join();
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace quatrace::cli
