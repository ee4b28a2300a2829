#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace orbifold {

/// Runs body(begin, end, worker) over a contiguous split of [0, count).
/// Chunks are ordered by worker index so callers can merge results in order.
/// The first exception thrown by a worker is rethrown on the caller.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body)
{
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        body(std::uint64_t{0}, count, 0U);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace orbifold
