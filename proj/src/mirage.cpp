#include "oasislab/mirage.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <iterator>

namespace oasislab {

std::string_view to_string(RunKind kind) {
    return kind == RunKind::oasis ? "oasis" : "mirage-only";
}

DeficiencyTable deficiency_table(Base b, int threads) {
    const Int hi = b.cube();
    const int parts = detail::chunk_count(0, hi, threads);
    std::vector<std::map<Int, std::vector<Int>>> partial(
        static_cast<std::size_t>(parts));
    detail::for_each_chunk(0, hi, threads, [&](int idx, Int lo, Int chunk_hi) {
        auto& local = partial[static_cast<std::size_t>(idx)];
        for (Int r = lo; r < chunk_hi; ++r)
            local[deficiency(r, b)].push_back(r);
    });
    DeficiencyTable table{b, {}};
    // Chunks are range-ordered, so concatenation keeps witness lists ascending.
    for (auto& part : partial)
        for (auto& [d, witnesses] : part) {
            auto& dst = table.entries[d];
            dst.insert(dst.end(), witnesses.begin(), witnesses.end());
        }
    return table;
}

std::vector<Run> runs_of_table(const DeficiencyTable& table) {
    std::vector<Run> runs;
    auto least_positive = [](const std::vector<Int>& witnesses) {
        for (Int w : witnesses)
            if (w > 0)
                return w;
        throw std::logic_error("deficiency class without positive witness");
    };
    for (auto it = table.entries.begin(); it != table.entries.end();) {
        Run run{table.base, it->first, it->first, 0, {}, RunKind::oasis};
        run.witnesses.push_back(least_positive(it->second));
        auto next = std::next(it);
        while (next != table.entries.end() && next->first == run.d_max + 1) {
            run.d_max = next->first;
            run.witnesses.push_back(least_positive(next->second));
            ++next;
        }
        run.length = run.d_max - run.d_min + 1;
        run.kind = classify_run(run);
        runs.push_back(std::move(run));
        it = next;
    }
    return runs;
}

std::vector<Run> maximal_mirage_runs(Base b, int threads) {
    return runs_of_table(deficiency_table(b, threads));
}

Int mirage_max_length(Base b, int threads) {
    Int best = 0;
    for (const auto& run : maximal_mirage_runs(b, threads))
        best = std::max(best, run.length);
    return best;
}

RunKind classify_run(const Run& run) {
    return run.d_min >= 0 ? RunKind::oasis : RunKind::mirage_only;
}

} // namespace oasislab
