#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace spanlab {

// Deterministic static-partition parallel for. Each index writes only its own
// output slot, so results are identical for any thread count.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                         unsigned threads = 0) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned t = static_cast<unsigned>(std::min<std::int64_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            for (std::int64_t i = w; i < n; i += t) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

// splitmix64, used to derive independent stream seeds from a run seed.
inline std::uint64_t mix_seed(std::uint64_t s) {
    s += 0x9e3779b97f4a7c15ull;
    s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
    s = (s ^ (s >> 27)) * 0x94d049bb133111ebull;
    return s ^ (s >> 31);
}

}  // namespace spanlab
