#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace seqc {

// Worker count: explicit request > SEQC_THREADS env > hardware concurrency.
inline unsigned effective_threads(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEQC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Process [begin, end) in fixed-size chunks handed to a small worker pool.
// Chunk boundaries depend only on `chunk`, never on the thread count, so
// any per-chunk outputs indexed by chunk id are deterministic.
// f(chunk_index, lo, hi) may run concurrently for distinct chunks.
template <class F>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk, unsigned threads,
                     F&& f) {
    if (begin >= end) return;
    const std::uint64_t n_chunks = (end - begin + chunk - 1) / chunk;
    threads = std::min<std::uint64_t>(effective_threads(threads), n_chunks);
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            const std::uint64_t lo = begin + c * chunk;
            f(c, lo, std::min(end, lo + chunk));
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
                if (c >= n_chunks) return;
                const std::uint64_t lo = begin + c * chunk;
                f(c, lo, std::min(end, lo + chunk));
            }
        });
    }
    for (auto& th : pool) th.join();
}

inline std::uint64_t chunk_count(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk) {
    return begin >= end ? 0 : (end - begin + chunk - 1) / chunk;
}

} // namespace seqc
