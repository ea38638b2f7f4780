#pragma once

#include <cstddef>
#include <functional>

namespace boott {

/// Thread count resolution order: explicit request, BOOT_T_THREADS, hardware.
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, count). Tasks must be independent; callers make
/// runs deterministic by storing results by index and seeding per index.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace boott
