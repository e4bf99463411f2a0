#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace quotlab {

/// Deterministic partition of [0, n) into at most `parts` contiguous chunks.
inline std::vector<std::pair<std::size_t, std::size_t>>
split_range(std::size_t n, unsigned parts) {
    std::vector<std::pair<std::size_t, std::size_t>> chunks;
    if (n == 0) return chunks;
    if (parts == 0) parts = 1;
    const std::size_t count = std::min<std::size_t>(parts, n);
    const std::size_t base = n / count;
    const std::size_t extra = n % count;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = base + (i < extra ? 1 : 0);
        chunks.emplace_back(begin, begin + len);
        begin += len;
    }
    return chunks;
}

/// Runs fn(chunk_index) for every chunk on up to `workers` threads. Each
/// chunk writes only to its own slot, so merging the slots in index order
/// gives scheduling-independent results.
template <typename Fn>
void run_chunks(std::size_t chunk_count, unsigned workers, Fn&& fn) {
    if (chunk_count == 0) return;
    if (workers <= 1 || chunk_count == 1) {
        for (std::size_t i = 0; i < chunk_count; ++i) fn(i);
        return;
    }
    const unsigned thread_count =
        static_cast<unsigned>(std::min<std::size_t>(workers, chunk_count));
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) {
        pool.emplace_back([&fn, t, thread_count, chunk_count] {
            for (std::size_t i = t; i < chunk_count; i += thread_count) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace quotlab
