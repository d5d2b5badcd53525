#include "oasislab/oasis.hpp"

#include "parallel.hpp"

#include <algorithm>

namespace oasislab {

namespace {

// Presence scan over constants [c_lo, c_hi]: one ascending pass of
// a < search_bound(c_hi) suffices, since the bound is monotone in c. Records
// the globally smallest fixed point per constant (-1 = none).
std::vector<Int> smallest_fixed_point_map(Base b, Int c_lo, Int c_hi,
                                          int threads) {
    const Int bound = search_bound(c_hi, b);
    const std::size_t width = static_cast<std::size_t>(c_hi - c_lo + 1);
    const int parts = detail::chunk_count(1, bound, threads);
    std::vector<std::vector<Int>> partial(
        static_cast<std::size_t>(parts), std::vector<Int>(width, -1));
    detail::for_each_chunk(1, bound, threads, [&](int idx, Int lo, Int hi) {
        auto& local = partial[static_cast<std::size_t>(idx)];
        for (Int a = lo; a < hi; ++a) {
            const Int d = deficiency(a, b);
            if (d < c_lo || d > c_hi)
                continue;
            auto& slot = local[static_cast<std::size_t>(d - c_lo)];
            if (slot < 0)
                slot = a;
        }
    });
    std::vector<Int> smallest(width, -1);
    for (const auto& local : partial)
        for (std::size_t i = 0; i < width; ++i)
            if (local[i] >= 0 && (smallest[i] < 0 || local[i] < smallest[i]))
                smallest[i] = local[i];
    return smallest;
}

Oasis verified(Oasis oasis) {
    for (Int i = 0; i < oasis.length; ++i) {
        const Int c = oasis.c_min + i;
        const Int a = oasis.fixed_points[static_cast<std::size_t>(i)];
        if (eval_happy(c, oasis.base, a) != a)
            throw std::logic_error("claimed fixed point fails verification");
    }
    return oasis;
}

} // namespace

std::vector<Oasis> oasis_scan(Base b, Int c_lo, Int c_hi, int threads) {
    if (c_lo < 0)
        throw std::invalid_argument("augmenting constants are non-negative");
    if (c_lo > c_hi)
        throw std::invalid_argument("scan interval is empty");
    const auto smallest = smallest_fixed_point_map(b, c_lo, c_hi, threads);
    std::vector<Oasis> oases;
    const Int width = c_hi - c_lo + 1;
    for (Int i = 0; i < width;) {
        if (smallest[static_cast<std::size_t>(i)] < 0) {
            ++i;
            continue;
        }
        Oasis oasis{b, c_lo + i, c_lo + i, 0, {}, false, false};
        while (i < width && smallest[static_cast<std::size_t>(i)] >= 0) {
            oasis.c_max = c_lo + i;
            oasis.fixed_points.push_back(smallest[static_cast<std::size_t>(i)]);
            ++i;
        }
        oasis.length = oasis.c_max - oasis.c_min + 1;
        oasis.truncated_lo = oasis.c_min == c_lo && c_lo > 0;
        oasis.truncated_hi = oasis.c_max == c_hi;
        oases.push_back(std::move(oasis));
    }
    return oases;
}

MaxOasisResult max_oasis(Base b, int threads) {
    if (b.value() % 2 != 0) {
        // Odd bases: every deficiency is even, so runs (and oases) have
        // length 1; {0} with fixed point 1 is the minimal example.
        return MaxOasisResult{1, Oasis{b, 0, 0, 1, {1}}, 1};
    }
    const auto runs = maximal_mirage_runs(b, threads);
    Int mirage_length = 0;
    for (const auto& run : runs)
        mirage_length = std::max(mirage_length, run.length);

    Int oasis_length = 0;
    for (const auto& run : runs)
        if (run.kind == RunKind::oasis)
            oasis_length = std::max(oasis_length, run.length);
    if (oasis_length == 0)
        return MaxOasisResult{1, Oasis{b, 0, 0, 1, {1}}, mirage_length};

    // Minimal example: least-starting maximal-length run with all values
    // positive; a run starting at d = 0 is accepted only as a fallback.
    const Run* chosen = nullptr;
    for (const auto& run : runs)
        if (run.length == oasis_length && run.d_min >= 1) {
            chosen = &run;
            break;
        }
    if (chosen == nullptr)
        for (const auto& run : runs)
            if (run.length == oasis_length && run.kind == RunKind::oasis) {
                chosen = &run;
                break;
            }

    Oasis example{b, chosen->d_min, chosen->d_max, chosen->length, {}};
    for (Int c = chosen->d_min; c <= chosen->d_max; ++c) {
        const auto a = smallest_fixed_point(c, b);
        if (!a)
            throw std::logic_error("oasis member without fixed point");
        // The run witness is the least positive r < b^3 in the class, which
        // is exactly the least fixed point whenever one lies below b^3.
        if (*a != chosen->witnesses[static_cast<std::size_t>(c - chosen->d_min)])
            throw std::logic_error("table witness disagrees with engine");
        example.fixed_points.push_back(*a);
    }
    return MaxOasisResult{oasis_length, verified(std::move(example)),
                          mirage_length};
}

Int oasis_length_bound(Base b) {
    if (b.value() % 2 != 0)
        return 1;
    const Int v = b.value();
    return v * v * v / 2 + v * v / 2 - v;
}

Oasis construct_5_oasis(Base b) {
    const Int v = b.value();
    if (v % 2 != 0 || v < 6)
        throw std::invalid_argument("construction requires an even base >= 6");
    const Int half = v / 2;
    const Int c0 = half * half - 4;
    const std::vector<Int> points{
        (half - 2) * v + 1,
        (half - 1) * v + 2,
        half * v + 2,
        (half - 1) * v + 1,
        half * v + 1,
    };
    return verified(Oasis{b, c0, c0 + 4, 5, points});
}

Oasis translate_oasis(const Oasis& o, Int t) {
    if (t < 1)
        throw std::invalid_argument("translation amount must be positive");
    if (o.fixed_points.size() != static_cast<std::size_t>(o.length))
        throw std::invalid_argument("oasis carries no fixed-point assignment");
    const Int largest =
        *std::max_element(o.fixed_points.begin(), o.fixed_points.end());
    // Least power of b above every fixed point, at least b^3 so the shifted
    // points keep their low-three-digit block verbatim.
    Int power = o.base.cube();
    while (power <= largest)
        power = detail::checked_mul(power, o.base.value());
    const Int shift = detail::checked_sub(detail::checked_mul(t, power),
                                          sum_of_digit_squares(t, o.base));
    Oasis out{o.base, detail::checked_add(o.c_min, shift),
              detail::checked_add(o.c_max, shift), o.length, {}};
    for (Int a : o.fixed_points)
        out.fixed_points.push_back(
            detail::checked_add(detail::checked_mul(t, power), a));
    return verified(std::move(out));
}

DigitTheoremReport check_digit_theorems(const Oasis& o) {
    DigitTheoremReport report;
    if (o.fixed_points.size() != static_cast<std::size_t>(o.length))
        throw std::invalid_argument("oasis carries no fixed-point assignment");

    std::size_t anchor = o.fixed_points.size();
    for (std::size_t i = 0; i < o.fixed_points.size(); ++i)
        if (o.fixed_points[i] >= o.base.cube()) {
            anchor = i;  // a member with more than three digits
            break;
        }
    if (anchor < o.fixed_points.size()) {
        const Int want =
            static_cast<Int>(digits(o.fixed_points[anchor], o.base).digits.size());
        for (std::size_t i = 0; i < o.fixed_points.size(); ++i) {
            const Int got =
                static_cast<Int>(digits(o.fixed_points[i], o.base).digits.size());
            if (got != want) {
                report.digit_count_ok = false;
                report.violations.push_back(
                    {"digit-count", o.c_min + static_cast<Int>(anchor),
                     o.fixed_points[anchor], o.c_min + static_cast<Int>(i),
                     o.fixed_points[i]});
            }
        }
    }

    // Digits of index >= 3 agree exactly when the quotients by b^3 agree.
    const Int high = o.fixed_points.front() / o.base.cube();
    for (std::size_t i = 1; i < o.fixed_points.size(); ++i)
        if (o.fixed_points[i] / o.base.cube() != high) {
            report.digit_agreement_ok = false;
            report.violations.push_back({"digit-agreement", o.c_min,
                                         o.fixed_points.front(),
                                         o.c_min + static_cast<Int>(i),
                                         o.fixed_points[i]});
        }
    return report;
}

} // namespace oasislab
