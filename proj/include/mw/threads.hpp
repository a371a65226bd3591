#pragma once

#include <cstddef>
#include <functional>

namespace mw {

// Global worker cap. 1 (the default) means fully sequential execution; the
// CLI --threads flag and mw_set_threads() raise it. Results are identical
// for any cap: work is split into disjoint index ranges and integer/complex
// partials are combined in a fixed order.
void set_thread_cap(unsigned cap);
unsigned thread_cap();

// Runs fn(lo, hi) over a partition of [begin, end). Ranges never overlap.
void parallel_for(std::size_t begin, std::size_t end, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mw
