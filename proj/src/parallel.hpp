#pragma once

#include "oasislab/core.hpp"

#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace oasislab::detail {

inline int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Contiguous, in-order partition of [lo, hi); never returns empty chunks.
inline std::vector<std::pair<Int, Int>> split_range(Int lo, Int hi, int parts) {
    std::vector<std::pair<Int, Int>> chunks;
    if (hi <= lo)
        return chunks;
    const Int span = hi - lo;
    const Int n = std::min<Int>(parts < 1 ? 1 : parts, span);
    for (Int i = 0; i < n; ++i) {
        const Int a = lo + span * i / n;
        const Int b = lo + span * (i + 1) / n;
        if (b > a)
            chunks.emplace_back(a, b);
    }
    return chunks;
}

// Runs fn(chunk_index, chunk_lo, chunk_hi) over a partition of [lo, hi).
// Chunk indices are dense and range-ordered, so callers can merge results
// deterministically regardless of scheduling. The first worker exception is
// rethrown after all workers join.
inline void for_each_chunk(Int lo, Int hi, int threads,
                           const std::function<void(int, Int, Int)>& fn) {
    const auto chunks = split_range(lo, hi, resolve_threads(threads));
    if (chunks.empty())
        return;
    if (chunks.size() == 1) {
        fn(0, chunks[0].first, chunks[0].second);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(chunks.size());
    workers.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        workers.emplace_back([&, i] {
            try {
                fn(static_cast<int>(i), chunks[i].first, chunks[i].second);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers)
        w.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

inline int chunk_count(Int lo, Int hi, int threads) {
    return static_cast<int>(split_range(lo, hi, resolve_threads(threads)).size());
}

} // namespace oasislab::detail
