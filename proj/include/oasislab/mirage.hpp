#pragma once

#include "oasislab/core.hpp"

#include <map>
#include <string_view>

namespace oasislab {

enum class RunKind { oasis, mirage_only };

std::string_view to_string(RunKind kind);

/// Deficiencies of every r in [0, b^3), grouped by value. Witness lists are
/// ascending and together partition [0, b^3).
struct DeficiencyTable {
    Base base;
    std::map<Int, std::vector<Int>> entries;
};

/// A maximal run of consecutive deficiency values. witnesses[i] certifies
/// d_min + i and is the least positive witness for it.
struct Run {
    Base base;
    Int d_min;
    Int d_max;
    Int length;
    std::vector<Int> witnesses;
    RunKind kind;

    friend bool operator==(const Run&, const Run&) = default;
};

DeficiencyTable deficiency_table(Base b, int threads = 1);

/// Every maximal run in the table, ordered by d_min.
std::vector<Run> maximal_mirage_runs(Base b, int threads = 1);
std::vector<Run> runs_of_table(const DeficiencyTable& table);

/// Maximum run length; bounds the maximal oasis length for the base.
Int mirage_max_length(Base b, int threads = 1);

/// oasis iff d_min >= 0: a positive witness exists for every member
/// (r = 1 certifies d = 0), so each member is an augmenting constant
/// with a fixed point.
RunKind classify_run(const Run& run);

} // namespace oasislab
