#pragma once

#include "oasislab/core.hpp"

namespace oasislab {

/// A fixed point a of the happy function with constant c, base b.
struct FixedPointRecord {
    Int a;
    Int c;
    Base base;
    Int digit_count;
};

/// Exclusive upper bound below which every fixed point for constant c must
/// lie. Returns b^n for the least n >= 1 with b^n - (n+1)(b-1)^2 > c: a fixed
/// point with m+1 digits satisfies b^m <= a <= c + (m+1)(b-1)^2, and the gap
/// b^(m+1) - b^m = b^m(b-1) always exceeds (b-1)^2, so once the inequality
/// holds it holds for every larger digit count.
Int search_bound(Int c, Base b);

/// All fixed points for constant c, ascending. Complete by the search bound.
/// Deserts are legitimate: no fixed points means an empty list, not an error.
std::vector<Int> fixed_points(Int c, Base b, int threads = 1);

bool has_fixed_point(Int c, Base b);

std::optional<Int> smallest_fixed_point(Int c, Base b);

/// The record for a when it is a fixed point of some family member.
std::optional<FixedPointRecord> fixed_point_record(Int a, Base b);

/// a+1 when b divides a (then both share one augmenting constant), else absent.
std::optional<Int> companion_increment(Int a, Base b);

/// The number with second digit e replaced by b-e, when e != 0; shares a's
/// augmenting constant. Absent when the second digit is zero. An involution.
std::optional<Int> companion_reflect_second_digit(Int a, Base b);

} // namespace oasislab
