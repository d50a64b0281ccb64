#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pbc {

// Order-preserving parallel map: results land at their input index, so any
// worker count produces identical output.
template <class R, class F>
std::vector<R> parallel_map(size_t n, unsigned workers, F&& f) {
    std::vector<R> out(n);
    if (workers <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    unsigned count = std::min<size_t>(workers, n);
    for (unsigned w = 0; w < count; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                out[i] = f(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace pbc
