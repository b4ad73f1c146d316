#pragma once

// Seed-partitioned fan-out over std::thread. Results are stored by index, so
// output order never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "tspn/geometry.hpp"

namespace tspn {

inline constexpr const char* kWorkersEnv = "TSPN_WORKERS";

/// Worker count from TSPN_WORKERS, else the hardware concurrency (at least 1).
[[nodiscard]] inline std::size_t worker_count() {
    if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env != '\0') {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw InvalidInput(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) and returns the results in index order.
/// The first exception thrown by any call is rethrown after all workers stop.
template <typename F>
[[nodiscard]] auto parallel_map(std::size_t count, F&& fn, std::size_t workers = worker_count())
    -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out(count);
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

/// Independent 64-bit seed for trial i (splitmix64 finalizer).
[[nodiscard]] inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t i) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace tspn
