#include "oasislab/fixed_points.hpp"

#include "parallel.hpp"

namespace oasislab {

Int search_bound(Int c, Base b) {
    if (c < 0)
        throw std::invalid_argument("augmenting constant must be >= 0");
    const Int step = (b.value() - 1) * (b.value() - 1);
    Int power = 1;
    for (Int n = 1;; ++n) {
        power = detail::checked_mul(power, b.value());
        const Int slack = detail::checked_mul(n + 1, step);
        if (power - slack > c)
            return power;
    }
}

std::vector<Int> fixed_points(Int c, Base b, int threads) {
    const Int bound = search_bound(c, b);
    const int parts = detail::chunk_count(1, bound, threads);
    std::vector<std::vector<Int>> found(static_cast<std::size_t>(parts));
    detail::for_each_chunk(1, bound, threads, [&](int idx, Int lo, Int hi) {
        auto& local = found[static_cast<std::size_t>(idx)];
        for (Int a = lo; a < hi; ++a)
            if (deficiency(a, b) == c)
                local.push_back(a);
    });
    std::vector<Int> out;
    for (const auto& part : found)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

bool has_fixed_point(Int c, Base b) {
    return smallest_fixed_point(c, b).has_value();
}

std::optional<Int> smallest_fixed_point(Int c, Base b) {
    const Int bound = search_bound(c, b);
    for (Int a = 1; a < bound; ++a)
        if (deficiency(a, b) == c)
            return a;
    return std::nullopt;
}

std::optional<FixedPointRecord> fixed_point_record(Int a, Base b) {
    const auto c = constant_of_fixed_point(a, b);
    if (!c)
        return std::nullopt;
    return FixedPointRecord{a, *c, b, static_cast<Int>(digits(a, b).digits.size())};
}

std::optional<Int> companion_increment(Int a, Base b) {
    if (a < 1)
        throw std::invalid_argument("fixed points are positive");
    if (a % b.value() != 0)
        return std::nullopt;
    return detail::checked_add(a, 1);
}

std::optional<Int> companion_reflect_second_digit(Int a, Base b) {
    if (a < 1)
        throw std::invalid_argument("fixed points are positive");
    const Int e = (a / b.value()) % b.value();
    if (e == 0)
        return std::nullopt;
    // a + (b - 2e) * b rewrites the second digit e as b - e; the digit-square
    // sum changes by exactly the same amount, so the deficiency is unchanged.
    return detail::checked_add(a, detail::checked_mul(b.value() - 2 * e, b.value()));
}

} // namespace oasislab
