#pragma once

#include "oasislab/fixed_points.hpp"
#include "oasislab/mirage.hpp"

namespace oasislab {

/// Consecutive constants [c_min, c_max] that each admit a fixed point.
/// fixed_points holds one witness per constant, in constant order. The
/// truncated flags mark runs that touch a scan window edge and so may
/// extend beyond it.
struct Oasis {
    Base base;
    Int c_min;
    Int c_max;
    Int length;
    std::vector<Int> fixed_points;
    bool truncated_lo = false;
    bool truncated_hi = false;

    friend bool operator==(const Oasis&, const Oasis&) = default;
};

struct MaxOasisResult {
    Int length;
    Oasis oasis;        // minimal maximal-length example, smallest fixed points
    Int mirage_length;  // maximal mirage run length, reported alongside
};

/// Maximal runs of constants with fixed points, intersected with
/// [c_lo, c_hi]; witnesses are the globally smallest fixed points.
std::vector<Oasis> oasis_scan(Base b, Int c_lo, Int c_hi, int threads = 1);

/// Maximal oasis length for the base and its minimal example, read from the
/// deficiency table. Among maximal-length runs the minimal example is the
/// least-starting run with strictly positive values, matching the published
/// convention; runs starting at d = 0 are used only when no such run exists.
/// Odd bases return length 1 with {0} directly.
MaxOasisResult max_oasis(Base b, int threads = 1);

/// Closed-form length bound: b^3/2 + b^2/2 - b for even b, 1 for odd b.
Int oasis_length_bound(Base b);

/// The explicit 5-oasis {B^2-4, ..., B^2}, B = b/2, for even b >= 6.
/// Every constructed fixed point is re-verified before returning.
Oasis construct_5_oasis(Base b);

/// Shifts an oasis by t*b^n - S_0(t) where n is the least exponent >= 3 with
/// b^n above every fixed point; the new fixed points are t*b^n + a. Each
/// returned pair is re-verified. Length is preserved.
Oasis translate_oasis(const Oasis& o, Int t);

struct DigitTheoremViolation {
    std::string check;  // "digit-count" or "digit-agreement"
    Int c_first;
    Int a_first;
    Int c_second;
    Int a_second;
};

struct DigitTheoremReport {
    bool digit_count_ok = true;
    bool digit_agreement_ok = true;
    std::vector<DigitTheoremViolation> violations;

    bool passed() const { return digit_count_ok && digit_agreement_ok; }
};

/// Empirical check of the two digit properties over the oasis's assigned
/// fixed points: (a) if any has more than three digits, all share one digit
/// count; (b) all agree on every digit of index >= 3. Failures are reported
/// with the offending pair, never thrown.
DigitTheoremReport check_digit_theorems(const Oasis& o);

} // namespace oasislab
