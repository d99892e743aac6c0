#ifndef LATSEC_SRC_PARALLEL_HPP
#define LATSEC_SRC_PARALLEL_HPP

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace latsec::detail {

inline int thread_count() {
    if (const char* env = std::getenv("LATSEC_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into contiguous chunks and runs fn(chunk, begin, end) on
// worker threads. Small totals run inline on the calling thread.
template <class F>
void parallel_chunks(std::uint64_t total, F&& fn, std::uint64_t min_per_thread = 1u << 20) {
    int threads = thread_count();
    if (threads > 1 && total / static_cast<std::uint64_t>(threads) < min_per_thread)
        threads = static_cast<int>(std::max<std::uint64_t>(1, total / min_per_thread));
    if (threads <= 1) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    std::uint64_t chunk = total / static_cast<std::uint64_t>(threads);
    for (int i = 0; i < threads; ++i) {
        std::uint64_t begin = chunk * static_cast<std::uint64_t>(i);
        std::uint64_t end = (i == threads - 1) ? total : begin + chunk;
        pool.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace latsec::detail

#endif
