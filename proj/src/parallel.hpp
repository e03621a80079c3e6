#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace erdos::detail {

// Runs fn(i) for i in [0, n) on up to `threads` workers and returns the
// results indexed by i.  Which worker runs which index is unspecified; the
// output order is not.
template <typename Result, typename Fn>
std::vector<Result> run_indexed(std::size_t n, unsigned threads, Fn&& fn) {
    std::vector<Result> results(n);
    const auto workers = static_cast<std::size_t>(std::max(1u, threads));
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) results[i] = fn(i);
    };
    {
        std::vector<std::jthread> pool;
        const auto extra = std::min(workers, n) - 1;
        pool.reserve(extra);
        for (std::size_t t = 0; t < extra; ++t) pool.emplace_back(work);
        work();
    }
    return results;
}

}  // namespace erdos::detail
