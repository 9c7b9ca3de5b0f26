#ifndef BOGOAMP_SWEEP_HPP
#define BOGOAMP_SWEEP_HPP

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bogoamp {

// Parallelism cap: min(hardware threads, BOGOAMP_THREADS if set).
unsigned sweep_thread_count(std::size_t n_points);

/// Evaluate f over a grid, dispatching contiguous chunks to worker
/// threads. Results are stored in grid order, so output is deterministic
/// regardless of scheduling. The first exception thrown by f is rethrown
/// on the calling thread.
template <typename T>
std::vector<T> parallel_map(const std::vector<double>& grid,
                            const std::function<T(double)>& f) {
    std::vector<T> out(grid.size());
    const unsigned n_threads = sweep_thread_count(grid.size());
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
        return out;
    }
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t chunk = (grid.size() + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(grid.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) out[i] = f(grid[i]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace bogoamp

#endif
