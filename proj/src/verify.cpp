#include "oasislab/verify.hpp"

#include "oasislab/oasis.hpp"
#include "oasislab/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <vector>

namespace oasislab {

namespace {

class Checker {
public:
    Checker(Base b, std::ostream& out) : base_(b), out_(out) {}

    void check(std::string_view name, bool ok) {
        out_ << (ok ? "[ok]   " : "[FAIL] ") << "base=" << base_.value() << ' '
             << name << '\n';
        all_ok_ = all_ok_ && ok;
    }

    bool all_ok() const { return all_ok_; }

private:
    Base base_;
    std::ostream& out_;
    bool all_ok_ = true;
};

// Deterministic sample of [lo, hi): endpoints plus a fixed-stride sweep.
std::vector<Int> sample_range(Int lo, Int hi, Int want) {
    std::vector<Int> out;
    if (hi <= lo)
        return out;
    const Int span = hi - lo;
    const Int step = std::max<Int>(1, span / want);
    for (Int v = lo; v < hi; v += step)
        out.push_back(v);
    out.push_back(hi - 1);
    return out;
}

Int capped_pow(Base b, Int exp, Int cap) {
    Int power = 1;
    for (Int i = 0; i < exp; ++i) {
        if (power > cap / b.value())
            return cap;
        power *= b.value();
    }
    return std::min(power, cap);
}

void verify_core(Checker& ck, Base b) {
    const Int hi = capped_pow(b, 6, 10'000'000);

    bool round_trip = true;
    bool digit_range = true;
    for (Int a : sample_range(0, hi, 4000)) {
        const DigitSeq seq = digits(a, b);
        round_trip = round_trip && seq.value() == a;
        if (!seq.digits.empty())
            digit_range = digit_range && seq.digits.back() != 0;
        for (Int d : seq.digits)
            digit_range = digit_range && d >= 0 && d < b.value();
    }
    round_trip = round_trip && digits(0, b).digits.empty();
    ck.check("core/digit-round-trip", round_trip);
    ck.check("core/digit-range", digit_range);

    bool decomposition = true;
    for (Int a : sample_range(1, hi, 500))
        for (Int c : {Int{0}, Int{1}, Int{17}, Int{4096}})
            decomposition = decomposition &&
                            eval_happy(c, b, a) == c + eval_happy(0, b, a);
    ck.check("core/eval-decomposition", decomposition);

    bool identity = true;
    for (Int a : sample_range(0, hi, 2000)) {
        const DigitSeq seq = digits(a, b);
        Int via_digits = 0;
        Int place = 1;
        for (std::size_t i = 0; i < seq.digits.size(); ++i) {
            if (i > 0)
                place *= b.value();
            via_digits += (place - seq.digits[i]) * seq.digits[i];
        }
        identity = identity && deficiency(a, b) == via_digits;
    }
    ck.check("core/deficiency-digit-identity", identity);

    bool equivalence = true;
    for (Int a : sample_range(1, hi, 800)) {
        const auto c = constant_of_fixed_point(a, b);
        const Int d = deficiency(a, b);
        equivalence = equivalence && (c.has_value() == (d >= 0));
        if (c) {
            equivalence = equivalence && eval_happy(*c, b, a) == a;
            equivalence = equivalence && (*c == 0 || eval_happy(*c - 1, b, a) != a);
            equivalence = equivalence && eval_happy(*c + 1, b, a) != a;
        }
    }
    ck.check("core/fixed-point-equivalence", equivalence);

    if (b.value() % 2 != 0) {
        bool parity = true;
        const Int parity_hi = capped_pow(b, 4, 200'000);
        for (Int a = 1; a < parity_hi; ++a) {
            const auto c = constant_of_fixed_point(a, b);
            if (c && *c % 2 != 0)
                parity = false;
        }
        ck.check("core/odd-base-even-constants", parity);
    }
}

void verify_engine(Checker& ck, Base b, int threads) {
    const Int c_cap = std::min<Int>(200, b.cube());
    const Int brute_hi = capped_pow(b, 5, 4'000'000);

    // Independent oracle: one exhaustive eval_happy sweep below b^5.
    std::map<Int, std::vector<Int>> oracle;
    for (Int a = 1; a < brute_hi; ++a) {
        const Int d = deficiency(a, b);
        if (d >= 0 && d <= c_cap)
            oracle[d].push_back(a);
    }
    bool complete = true;
    bool sound = true;
    for (Int c = 0; c <= c_cap; ++c) {
        const auto fps = fixed_points(c, b, threads);
        std::vector<Int> below;
        for (Int a : fps) {
            sound = sound && eval_happy(c, b, a) == a;
            if (a < brute_hi)
                below.push_back(a);
        }
        const auto it = oracle.find(c);
        const std::vector<Int> expect =
            it == oracle.end() ? std::vector<Int>{} : it->second;
        complete = complete && below == expect;
        sound = sound && std::is_sorted(fps.begin(), fps.end());
        for (Int a : fps)
            sound = sound && a < search_bound(c, b);
    }
    ck.check("engine/oracle-completeness", complete);
    ck.check("engine/soundness-and-order", sound);

    bool unique = true;
    for (Int a : sample_range(1, brute_hi, 300)) {
        const Int d = deficiency(a, b);
        if (d >= 0) {
            const auto fps = fixed_points(d, b);
            unique = unique &&
                     std::find(fps.begin(), fps.end(), a) != fps.end();
            const auto neighbors = fixed_points(d + 1, b);
            unique = unique && std::find(neighbors.begin(), neighbors.end(),
                                         a) == neighbors.end();
        }
    }
    ck.check("engine/constant-uniqueness", unique);

    bool closure = true;
    for (Int c = 0; c <= std::min<Int>(60, c_cap); ++c) {
        const auto fps = fixed_points(c, b);
        const std::set<Int> members(fps.begin(), fps.end());
        for (Int a : fps) {
            if (const auto inc = companion_increment(a, b))
                closure = closure && members.count(*inc) > 0;
            if (const auto refl = companion_reflect_second_digit(a, b))
                closure = closure && members.count(*refl) > 0;
        }
    }
    ck.check("engine/companion-closure", closure);

    bool involution = true;
    for (Int a : sample_range(1, brute_hi, 500)) {
        const auto once = companion_reflect_second_digit(a, b);
        if (once) {
            const auto twice = companion_reflect_second_digit(*once, b);
            involution = involution && twice && *twice == a;
        }
    }
    ck.check("engine/reflection-involution", involution);

    if (b.value() % 2 != 0) {
        bool empty_odd = true;
        for (Int c = 1; c <= std::min<Int>(1000, b.cube()); c += 2)
            empty_odd = empty_odd && fixed_points(c, b).empty();
        ck.check("engine/odd-base-odd-constants-empty", empty_odd);
    }
}

void verify_mirage(Checker& ck, Base b, int threads) {
    const auto table = deficiency_table(b, threads);

    Int covered = 0;
    bool witnesses_valid = true;
    for (const auto& [d, witnesses] : table.entries) {
        covered += static_cast<Int>(witnesses.size());
        witnesses_valid =
            witnesses_valid && std::is_sorted(witnesses.begin(), witnesses.end());
        for (Int r : witnesses)
            witnesses_valid = witnesses_valid && r >= 0 && r < b.cube() &&
                              deficiency(r, b) == d;
    }
    ck.check("mirage/partition-count", covered == b.cube());
    ck.check("mirage/witness-validity", witnesses_valid);

    const auto runs = runs_of_table(table);
    bool maximal = true;
    bool lengths = true;
    bool classified = true;
    for (const auto& run : runs) {
        maximal = maximal && table.entries.count(run.d_min - 1) == 0 &&
                  table.entries.count(run.d_max + 1) == 0;
        lengths = lengths && run.length == run.d_max - run.d_min + 1;
        classified = classified && run.kind == classify_run(run) &&
                     (run.kind == RunKind::oasis) == (run.d_min >= 0);
    }
    ck.check("mirage/run-maximality", maximal);
    ck.check("mirage/run-lengths", lengths);
    ck.check("mirage/run-classification", classified);

    Int top_oasis_d = 0;
    for (const auto& run : runs)
        if (run.kind == RunKind::oasis)
            top_oasis_d = std::max(top_oasis_d, run.d_max);
    const auto scan = oasis_scan(b, 0, top_oasis_d, threads);
    std::map<Int, Int> scan_smallest;
    for (const auto& oasis : scan)
        for (Int c = oasis.c_min; c <= oasis.c_max; ++c)
            scan_smallest[c] =
                oasis.fixed_points[static_cast<std::size_t>(c - oasis.c_min)];
    bool sound = true;
    for (const auto& run : runs) {
        if (run.kind != RunKind::oasis)
            continue;
        for (Int d = run.d_min; d <= run.d_max; ++d) {
            const auto it = scan_smallest.find(d);
            if (it == scan_smallest.end()) {
                sound = false;
                continue;
            }
            sound = sound && deficiency(it->second, b) == d;
            if (it->second < b.cube())
                sound = sound &&
                        it->second ==
                            run.witnesses[static_cast<std::size_t>(d - run.d_min)];
        }
    }
    ck.check("mirage/oasis-run-soundness", sound);

    const auto result = max_oasis(b, threads);
    ck.check("mirage/oasis-length-bounded-by-mirage",
             result.length <= result.mirage_length);

    const auto again = deficiency_table(b, threads >= 2 ? 1 : 4);
    ck.check("mirage/deterministic-partitioning",
             table.entries == again.entries && runs == runs_of_table(again));
}

void verify_oasis(Checker& ck, Base b, int threads) {
    const auto result = max_oasis(b, threads);
    ck.check("oasis/closed-form-bound",
             result.length <= oasis_length_bound(b));

    if (b.value() % 2 == 0 && b.value() >= 6) {
        bool constructed = true;
        try {
            const auto oasis = construct_5_oasis(b);
            constructed = oasis.length == 5 &&
                          oasis.c_max - oasis.c_min + 1 == 5 &&
                          oasis.c_min == (b.value() / 2) * (b.value() / 2) - 4;
            for (Int i = 0; i < 5; ++i)
                constructed =
                    constructed &&
                    eval_happy(oasis.c_min + i, b,
                               oasis.fixed_points[static_cast<std::size_t>(i)]) ==
                        oasis.fixed_points[static_cast<std::size_t>(i)];
        } catch (const std::exception&) {
            constructed = false;
        }
        ck.check("oasis/five-oasis-construction", constructed);
    }

    bool translated = true;
    for (Int t : {Int{1}, Int{2}, Int{5}}) {
        const auto shifted = translate_oasis(result.oasis, t);
        translated = translated && shifted.length == result.oasis.length;
        for (Int i = 0; i < shifted.length; ++i)
            translated = translated &&
                         eval_happy(shifted.c_min + i, b,
                                    shifted.fixed_points[static_cast<std::size_t>(
                                        i)]) ==
                             shifted.fixed_points[static_cast<std::size_t>(i)];
    }
    ck.check("oasis/translation-preserves-length", translated);

    const auto scan = oasis_scan(b, 0, b.cube(), threads);
    if (b.value() % 2 == 0) {
        Int longest = 0;
        for (const auto& oasis : scan)
            longest = std::max(longest, oasis.length);
        bool consistent = result.length == longest;
        bool found = false;
        for (const auto& oasis : scan)
            if (oasis.c_min == result.oasis.c_min &&
                oasis.c_max == result.oasis.c_max &&
                oasis.fixed_points == result.oasis.fixed_points)
                found = true;
        ck.check("oasis/scan-mirage-consistency", consistent && found);

        bool theorems = true;
        for (const auto& oasis : scan)
            theorems = theorems && check_digit_theorems(oasis).passed();
        ck.check("oasis/digit-theorems", theorems);
    } else {
        bool collapsed = true;
        for (const auto& oasis : scan) {
            collapsed = collapsed && oasis.length == 1;
            collapsed = collapsed && oasis.c_min % 2 == 0;
        }
        ck.check("oasis/odd-base-collapse", collapsed);
    }
}

void verify_report(Checker& ck, Base b, int threads) {
    SearchReport report;
    report.base = b.value();
    report.command = "mirage-max";
    report.bound = b.cube();
    for (const auto& run : maximal_mirage_runs(b, threads))
        report.runs.push_back(to_entry(run));
    report.elapsed_ms = 12;

    const auto json_once = render_report(report, Format::json);
    const auto json_twice = render_report(report, Format::json);
    ck.check("report/deterministic-bytes",
             json_once == json_twice &&
                 render_report(report, Format::csv) ==
                     render_report(report, Format::csv));
    ck.check("report/json-round-trip", report_from_json(json_once) == report);
}

} // namespace

bool verify_base(Base b, int threads, std::ostream& out) {
    Checker ck(b, out);
    verify_core(ck, b);
    verify_engine(ck, b, threads);
    verify_mirage(ck, b, threads);
    verify_oasis(ck, b, threads);
    verify_report(ck, b, threads);
    out << (ck.all_ok() ? "verify: all checks passed\n"
                        : "verify: FAILURES detected\n");
    return ck.all_ok();
}

} // namespace oasislab
