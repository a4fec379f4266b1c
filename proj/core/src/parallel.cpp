#include <xh/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace xh
{
    namespace
    {
        std::atomic<std::size_t> configured_threads{0};
    }

    void set_max_threads(std::size_t n)
    {
        configured_threads = n;
    }

    auto max_threads() -> std::size_t
    {
        auto n = configured_threads.load();
        if (n == 0)
            n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
        return n;
    }

    void parallel_for(std::size_t count, const std::function<void(std::size_t)> & body)
    {
        const std::size_t workers = std::min(max_threads(), count);
        if (workers <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t)
            pool.emplace_back(work);
        work();
        pool.clear();
        if (failure)
            std::rethrow_exception(failure);
    }
}
