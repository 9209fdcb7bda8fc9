#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sgr {

inline int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(begin, end, chunk_index) over a static split of [0, count) into at
// most `threads` contiguous chunks. Chunk boundaries depend only on count and
// threads, so per-chunk results merged in chunk order are deterministic.
inline void parallel_chunks(std::size_t count, int threads,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
    if (threads < 1) threads = 1;
    std::size_t nchunks = std::min<std::size_t>(count, static_cast<std::size_t>(threads));
    if (nchunks <= 1) {
        if (count > 0) fn(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    std::size_t base = count / nchunks, extra = count % nchunks, start = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        pool.emplace_back(fn, start, start + len, static_cast<int>(c));
        start += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace sgr
