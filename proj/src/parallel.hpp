#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "haulsim/errors.hpp"

namespace haulsim::detail {

// Splits [0, n) into contiguous chunks, one per worker, and runs fn(begin,
// end) on each. Chunk boundaries depend only on (n, threads) and every
// writer owns disjoint preallocated slots, so results never depend on
// scheduling order or thread count.
template <typename Fn>
void for_chunks(std::size_t n, int threads, Fn&& fn) {
    if (threads < 1) {
        throw ArgumentError("thread count must be at least 1");
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                n == 0 ? 1 : n);
    if (workers <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace haulsim::detail
