#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oasislab {

using Int = std::int64_t;

/// Thrown whenever a computation would leave the signed 64-bit range.
/// Results are never silently wrapped.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, Int exp);

} // namespace detail

/// A positional number base b >= 2. Construction rejects values whose fourth
/// power does not fit in Int, so every in-scope computation stays exact.
class Base {
public:
    explicit Base(Int value);

    Int value() const noexcept { return value_; }
    Int cube() const noexcept { return cube_; }

    friend bool operator==(const Base&, const Base&) = default;

private:
    Int value_;
    Int cube_;
};

/// Little-endian digit expansion: digits[i] is the coefficient of base^i.
/// Empty for zero; the top digit is nonzero otherwise.
struct DigitSeq {
    std::vector<Int> digits;
    Base base;

    /// Reconstructs the expanded integer.
    Int value() const;
};

/// A value r together with d = r - S_0(r) in the given base.
struct Deficiency {
    Int r;
    Int d;
    Base base;
};

DigitSeq digits(Int a, Base b);

/// Sum of the squares of the base-b digits of a; 0 for a = 0.
Int sum_of_digit_squares(Int a, Base b);

/// The augmented happy function: c plus the digit-square sum of a (a >= 1).
Int eval_happy(Int c, Base b, Int a);

/// r - sum_of_digit_squares(r, b). May be negative; defined for all r >= 0.
Int deficiency(Int r, Base b);

Deficiency deficiency_of(Int r, Base b);

/// The unique augmenting constant for which a is a fixed point, when one
/// exists: deficiency(a, b) if that is non-negative, otherwise absent.
std::optional<Int> constant_of_fixed_point(Int a, Base b);

/// Renders a in base b, most significant digit first, with digits above 9
/// parenthesized: 271 in base 16 -> "10(15)".
std::string to_base_string(Int a, Base b);

} // namespace oasislab
