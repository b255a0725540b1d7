#pragma once

// Chunked parallel_for over an index range.  Thread count comes from the MLC_THREADS
// environment variable (default: hardware concurrency, capped at 16).  Callers merge
// per-chunk results in chunk order, so output is deterministic regardless of schedule.

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mlc {

inline unsigned thread_count() {
    if (const char* env = std::getenv("MLC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return hw > 16 ? 16 : hw;
}

// fn(chunk_index, begin, end) on disjoint subranges of [begin, end).
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, const Fn& fn) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    unsigned threads = thread_count();
    if (threads <= 1 || total < 2 * threads) {
        fn(0u, begin, end);
        return;
    }
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t step = total / threads;
    for (unsigned c = 0; c < threads; ++c) {
        std::uint64_t lo = begin + c * step;
        std::uint64_t hi = (c + 1 == threads) ? end : lo + step;
        pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mlc
