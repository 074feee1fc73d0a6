#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace wdlkit {

/// Worker count: WDL_THREADS caps it, 0 or unset means automatic.
inline std::size_t worker_count() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("WDL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && static_cast<std::size_t>(v) < hw)
            return static_cast<std::size_t>(v);
    }
    return hw;
}

/// Runs f(begin, end) over a partition of [0, n). Stays serial below the
/// threshold so tiny scans never pay thread startup. Workers own disjoint
/// ranges; callers aggregate results per range to keep output deterministic.
template <class F>
void parallel_chunks(std::size_t n, F&& f, std::size_t serial_threshold = 4096) {
    std::size_t workers = worker_count();
    if (n <= serial_threshold || workers <= 1) {
        f(std::size_t{0}, n);
        return;
    }
    if (workers > n) workers = n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        pool.emplace_back([&f, begin, end] { f(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace wdlkit
