#pragma once

#include <cstddef>
#include <functional>

namespace winding {

// Global worker budget for the O(N^2) kernels. 0 restores the hardware default.
void set_max_threads(unsigned n);
unsigned max_threads();

// Runs fn(begin, end) over a contiguous block decomposition of [0, count).
// Each block writes only to its own output slots, so results do not depend
// on the number of workers or on scheduling order.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace winding
