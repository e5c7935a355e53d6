// Deterministic parallel map: items write into preallocated slots, reductions
// happen after the join, so worker count never changes results.

#ifndef NHG_PARALLEL_HPP
#define NHG_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nhg {

inline void parallel_for(long n, int workers, const std::function<void(long)>& body) {
    if (n <= 0) return;
    workers = std::max(1, std::min<long>(workers, n));
    if (workers == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<long> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&]() {
        for (;;) {
            long i = cursor.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace nhg

#endif
