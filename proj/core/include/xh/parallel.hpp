#pragma once

#include <cstddef>
#include <functional>

namespace xh
{
    /// Upper bound on worker threads used by the library (1 = fully sequential).
    /// Defaults to the hardware concurrency.
    void set_max_threads(std::size_t n);
    auto max_threads() -> std::size_t;

    /// Runs body(i) for i in [0, count), spread over at most max_threads()
    /// workers. Callers write results into per-index slots so any reduction
    /// afterwards happens in index order.
    void parallel_for(std::size_t count, const std::function<void(std::size_t)> & body);
}
