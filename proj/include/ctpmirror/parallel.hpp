/// @file parallel.hpp
/// @brief Thread cap and an index-parallel loop without reductions

#pragma once

#include <cstddef>
#include <functional>

namespace ctpm {

/// Worker count: CTP_MIRROR_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_cap();

/// Calls body(i) for i in [0, count). Each index is handled by exactly one worker
/// and no state is shared, so results do not depend on the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace ctpm
