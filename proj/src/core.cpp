#include "oasislab/core.hpp"

namespace oasislab {

namespace detail {

Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer overflow in subtraction");
    return out;
}

Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

Int checked_pow(Int base, Int exp) {
    Int out = 1;
    for (Int i = 0; i < exp; ++i)
        out = checked_mul(out, base);
    return out;
}

} // namespace detail

Base::Base(Int value) : value_(value), cube_(0) {
    if (value < 2)
        throw std::invalid_argument("base must be at least 2");
    // Guard b^4 so digit-square sums and cube-range scans stay exact.
    cube_ = detail::checked_mul(detail::checked_mul(value, value), value);
    detail::checked_mul(cube_, value);
}

Int DigitSeq::value() const {
    Int acc = 0;
    Int place = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0)
            place = detail::checked_mul(place, base.value());
        acc = detail::checked_add(acc, detail::checked_mul(digits[i], place));
    }
    return acc;
}

DigitSeq digits(Int a, Base b) {
    if (a < 0)
        throw std::invalid_argument("digit expansion requires a >= 0");
    DigitSeq seq{{}, b};
    while (a > 0) {
        seq.digits.push_back(a % b.value());
        a /= b.value();
    }
    return seq;
}

Int sum_of_digit_squares(Int a, Base b) {
    if (a < 0)
        throw std::invalid_argument("digit-square sum requires a >= 0");
    Int sum = 0;
    while (a > 0) {
        const Int d = a % b.value();
        sum += d * d;  // d < b and b^4 fits, so no overflow is possible here
        a /= b.value();
    }
    return sum;
}

Int eval_happy(Int c, Base b, Int a) {
    if (c < 0)
        throw std::invalid_argument("augmenting constant must be >= 0");
    if (a < 1)
        throw std::invalid_argument("happy functions take positive arguments");
    return detail::checked_add(c, sum_of_digit_squares(a, b));
}

Int deficiency(Int r, Base b) {
    if (r < 0)
        throw std::invalid_argument("deficiency requires r >= 0");
    return r - sum_of_digit_squares(r, b);
}

Deficiency deficiency_of(Int r, Base b) {
    return Deficiency{r, deficiency(r, b), b};
}

std::optional<Int> constant_of_fixed_point(Int a, Base b) {
    if (a < 1)
        throw std::invalid_argument("fixed points are positive");
    const Int d = deficiency(a, b);
    if (d < 0)
        return std::nullopt;
    return d;
}

std::string to_base_string(Int a, Base b) {
    if (a < 0)
        throw std::invalid_argument("base rendering requires a >= 0");
    if (a == 0)
        return "0";
    std::string out;
    const DigitSeq seq = digits(a, b);
    for (auto it = seq.digits.rbegin(); it != seq.digits.rend(); ++it) {
        if (*it > 9) {
            out += '(';
            out += std::to_string(*it);
            out += ')';
        } else {
            out += std::to_string(*it);
        }
    }
    return out;
}

} // namespace oasislab
