#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace packfour {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. fn must only write
/// state owned by index i.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    const auto threads = std::min(static_cast<std::size_t>(std::max(1, jobs)), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
}

}  // namespace packfour
