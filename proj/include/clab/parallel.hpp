#ifndef CLAB_PARALLEL_HPP
#define CLAB_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace clab {

// Worker count: CONVERSE_LAB_THREADS, default 1 (sequential).
inline int worker_count() {
    static int n = [] {
        const char* env = std::getenv("CONVERSE_LAB_THREADS");
        if (!env) return 1;
        int v = std::atoi(env);
        if (v < 1) return 1;
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? std::min<int>(v, static_cast<int>(hw) * 4) : v;
    }();
    return n;
}

// Splits [0, count) into fixed chunks, maps fn(lo, hi) -> R over them (in
// parallel when workers > 1) and returns the per-chunk results in chunk
// order. The chunk layout is independent of the worker count, so any
// order-sensitive reduction over the returned vector is deterministic.
template <typename R, typename F>
std::vector<R> parallel_chunked(int64_t count, int64_t chunk_size, F&& fn) {
    int64_t chunks = count <= 0 ? 0 : (count + chunk_size - 1) / chunk_size;
    std::vector<R> results(static_cast<size_t>(chunks));
    int workers = worker_count();
    if (workers <= 1 || chunks <= 1) {
        for (int64_t c = 0; c < chunks; ++c)
            results[c] = fn(c * chunk_size, std::min(count, (c + 1) * chunk_size));
        return results;
    }
    std::atomic<int64_t> next{0};
    auto work = [&] {
        for (;;) {
            int64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            results[c] = fn(c * chunk_size, std::min(count, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return results;
}

} // namespace clab

#endif
