#include "mw/threads.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace mw {

namespace {
std::atomic<unsigned> g_thread_cap{1};
}

void set_thread_cap(unsigned cap) { g_thread_cap.store(cap == 0 ? 1 : cap); }

unsigned thread_cap() { return g_thread_cap.load(); }

void parallel_for(std::size_t begin, std::size_t end, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (begin >= end) return;
    std::size_t total = end - begin;
    unsigned cap = thread_cap();
    std::size_t workers = cap;
    if (min_chunk > 0) workers = std::min<std::size_t>(workers, (total + min_chunk - 1) / min_chunk);
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = begin + w * chunk;
        if (lo >= end) break;
        std::size_t hi = std::min(end, lo + chunk);
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mw
