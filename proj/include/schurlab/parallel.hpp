#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace schurlab {

// Run body(i) for i in [0, count) on the given number of workers. Bodies must
// be independent; results keyed by index stay deterministic regardless of the
// worker count.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body)
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::size_t>(workers, count) - 1);
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
}

} // namespace schurlab
