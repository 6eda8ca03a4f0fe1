#ifndef ORDSPEED_PARALLEL_HPP
#define ORDSPEED_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace ordspeed {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, begin, end) over [0, total) split into contiguous
// chunks, one per worker. Results must be merged by chunk index afterwards,
// which keeps reductions deterministic.
inline void parallel_chunks(int64_t total, int threads,
                            const std::function<void(int, int64_t, int64_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || total <= 1) {
        fn(0, 0, total);
        return;
    }
    int chunks = threads;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        int64_t begin = total * c / chunks;
        int64_t end = total * (c + 1) / chunks;
        pool.emplace_back(fn, c, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace ordspeed

#endif
