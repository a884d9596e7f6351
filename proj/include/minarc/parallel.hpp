// SPDX-License-Identifier: Apache-2.0
//
// Chunked parallel-for with deterministic, order-preserving reduction:
// results land in a vector indexed by chunk, merged by the caller in
// chunk order, so outputs are identical for any thread count.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace minarc {

inline int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// fn(chunk_index) for chunk_index in [0, n_chunks).
template <typename Fn>
void parallel_chunks(std::size_t n_chunks, int threads, Fn&& fn) {
    if (threads <= 1 || n_chunks <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n_chunks) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<std::size_t>(threads, n_chunks);
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace minarc
