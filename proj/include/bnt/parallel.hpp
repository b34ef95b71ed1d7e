#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace bnt {

inline int default_workers() {
    if (const char* env = std::getenv("BNT_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// fn(worker_id, begin, end) over a contiguous index range, blocking.
template <class F>
void parallel_chunks(uint64_t n, int workers, F&& fn) {
    workers = std::max(1, std::min<int>(workers, n ? static_cast<int>(std::min<uint64_t>(n, 256)) : 1));
    if (workers == 1 || n == 0) {
        fn(0, uint64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    uint64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        uint64_t b = std::min<uint64_t>(n, w * chunk);
        uint64_t e = std::min<uint64_t>(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, w, b, e] { fn(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bnt
