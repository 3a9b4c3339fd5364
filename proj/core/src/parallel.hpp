#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace tcpd::detail {

/// Splits [0, total) into chunks handed out to `threads` workers. The worker
/// is called as worker(begin, end) and should poll `stop` itself. With one
/// thread the range is processed in order on the calling thread.
template <class Worker>
void run_partitioned(std::uint64_t total, unsigned threads, const std::atomic<bool>& stop, Worker&& worker) {
    if (threads <= 1 || total <= 1) {
        worker(std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (std::uint64_t{threads} * 64));
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::uint64_t begin = next.fetch_add(chunk);
                if (begin >= total) return;
                worker(begin, std::min(total, begin + chunk));
            }
        });
}

} // namespace tcpd::detail
