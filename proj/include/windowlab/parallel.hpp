#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace windowlab {

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Splits [0, total) into `workers` contiguous ranges and runs
// fn(part_index, begin, end) for each. Partition bounds depend only on
// (total, workers), so any per-part results can be merged deterministically
// by part index.
template <class Fn>
void run_partitions(std::uint64_t total, unsigned workers, Fn&& fn) {
    if (workers <= 1 || total < 2) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    if (workers > total) workers = static_cast<unsigned>(total);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned p = 0; p < workers; ++p) {
        const std::uint64_t begin = total / workers * p + std::min<std::uint64_t>(p, total % workers);
        const std::uint64_t len = total / workers + (p < total % workers ? 1 : 0);
        threads.emplace_back([&fn, p, begin, len] { fn(p, begin, begin + len); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace windowlab
