#pragma once

#include <cstdint>
#include <functional>

namespace hecke {

// Number of worker threads: hardware concurrency capped by the
// HECKE_THREADS environment variable (>=1).
unsigned worker_count();

// Runs body(begin, end) over disjoint chunks of [begin, end) on worker
// threads. Chunks are handed out dynamically; bodies must write only to
// slots they own, so results do not depend on scheduling.
void parallel_for(std::uint64_t begin, std::uint64_t end, std::uint64_t grain,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace hecke
