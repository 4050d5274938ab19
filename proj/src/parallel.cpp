#include "hecke/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hecke {

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("HECKE_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

void parallel_for(std::uint64_t begin, std::uint64_t end, std::uint64_t grain,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body) {
    if (begin >= end) return;
    if (grain == 0) grain = 1;
    const unsigned workers = worker_count();
    if (workers == 1 || end - begin <= grain) {
        body(begin, end);
        return;
    }

    std::atomic<std::uint64_t> next{begin};
    auto run = [&] {
        for (;;) {
            std::uint64_t lo = next.fetch_add(grain);
            if (lo >= end) break;
            std::uint64_t hi = lo + grain < end ? lo + grain : end;
            body(lo, hi);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace hecke
