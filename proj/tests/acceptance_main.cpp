// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: oasislab_acceptance [golden_dir]

#include "oasislab/cli.hpp"
#include "oasislab/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace oasislab;

namespace {

int failures = 0;

void report(const std::string& criterion, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion;
    if (!ok && !detail.empty())
        std::cout << " — " << detail;
    std::cout << '\n';
    if (!ok)
        ++failures;
}

struct ExpectedRow {
    Int base;
    Int length;
    Int c_min;
    Int c_max;
    std::vector<Int> points;
};

// The published table of minimal maximal-length oases, decimal throughout.
const std::vector<ExpectedRow> kPublishedTable = {
    {2, 2, 3, 4, {4, 6}},
    {4, 6, 28, 33, {32, 38, 42, 36, 40, 51}},
    {6, 5, 5, 9, {6, 14, 20, 12, 18}},
    {8, 8, 304, 311, {347, 338, 391, 336, 346, 354, 344, 352}},
    {10, 8, 487, 494, {544, 554, 522, 533, 520, 609, 543, 532}},
    {12, 8, 172, 179, {207, 194, 299, 192, 206, 218, 204, 216}},
    {14, 8, 421, 428, {434, 451, 601, 480, 494, 450, 465, 448}},
    {16, 8, 559, 566, {628, 644, 594, 611, 592, 799, 627, 610}},
    {18, 8, 1663, 1670, {1768, 1786, 1730, 1749, 1728, 1960, 1767, 1748}},
    {20, 9, 5124, 5132, {5383, 5362, 5699, 5360, 5382, 5402, 5380, 5400, 5617}},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        return {};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

void check_table1_reproduction(const std::string& golden_dir) {
    const auto start = std::chrono::steady_clock::now();

    std::ostringstream out;
    std::ostringstream err;
    const int code =
        run_cli({"table1", "--max-base", "20", "--format", "csv"}, out, err);

    const auto rows = table1(20);
    bool rows_ok = rows.size() == kPublishedTable.size();
    std::string detail;
    for (std::size_t i = 0; rows_ok && i < rows.size(); ++i) {
        const auto& got = rows[i];
        const auto& want = kPublishedTable[i];
        if (got.base != want.base || got.length != want.length ||
            got.c_min != want.c_min || got.c_max != want.c_max ||
            got.smallest_fixed_points != want.points) {
            rows_ok = false;
            detail = "mismatch at base " + std::to_string(want.base);
        }
    }

    const double elapsed = seconds_since(start);
    const bool cli_ok = code == 0 && !out.str().empty();
    const bool timing_ok = elapsed < 10.0;
    report("table1-reproduction",
           rows_ok && cli_ok && timing_ok,
           !timing_ok ? "exceeded 10 s" : detail);

    bool golden_ok = true;
    if (!golden_dir.empty()) {
        const auto csv = out.str();
        std::ostringstream json_out, text_out, sink;
        run_cli({"table1", "--max-base", "20", "--format", "json"}, json_out,
                sink);
        run_cli({"table1", "--max-base", "20"}, text_out, sink);
        golden_ok = csv == read_file(golden_dir + "/table1.csv") &&
                    json_out.str() == read_file(golden_dir + "/table1.json") &&
                    text_out.str() == read_file(golden_dir + "/table1.txt");
    }
    report("table1-golden-files", golden_ok);
}

void check_final_theorem() {
    const std::map<Int, Int> expected = {{2, 2},  {4, 6},  {6, 5},  {8, 8},
                                         {10, 8}, {12, 8}, {14, 8}, {16, 8},
                                         {18, 8}, {20, 9}};
    bool ok = true;
    std::string detail;
    for (const auto& [b, length] : expected) {
        const auto result = max_oasis(Base{b});
        if (result.length != length || result.mirage_length != length) {
            ok = false;
            detail = "base " + std::to_string(b);
        }
    }
    report("final-theorem-lengths", ok, detail);
}

void check_odd_bases() {
    bool ok = true;
    std::string detail;
    for (Int b = 3; b <= 19; b += 2) {
        const Base base{b};
        for (const auto& oasis : oasis_scan(base, 0, base.cube())) {
            if (oasis.length != 1 || oasis.c_min % 2 != 0) {
                ok = false;
                detail = "base " + std::to_string(b) + " constant " +
                         std::to_string(oasis.c_min);
            }
        }
    }
    report("odd-base-collapse", ok, detail);
}

void check_length_bound() {
    bool ok = true;
    std::string detail;
    for (Int b = 2; b <= 20; ++b) {
        const auto result = max_oasis(Base{b});
        if (result.length > oasis_length_bound(Base{b})) {
            ok = false;
            detail = "base " + std::to_string(b);
        }
    }
    report("oasis-length-bound", ok, detail);
}

void check_base6_mirage() {
    bool ok = false;
    for (const auto& run : maximal_mirage_runs(Base{6}))
        if (run.d_min == -4 && run.d_max == 0 && run.length == 5 &&
            run.kind == RunKind::mirage_only &&
            run.witnesses == std::vector<Int>{16, 22, 2, 9, 1})
            ok = true;
    report("base6-mirage-example", ok);
}

void check_construction() {
    bool ok = true;
    std::string detail;
    for (Int b = 6; b <= 40; b += 2) {
        try {
            const auto oasis = construct_5_oasis(Base{b});
            if (oasis.length != 5 ||
                oasis.fixed_points.size() != 5 ||
                oasis.c_max - oasis.c_min != 4) {
                ok = false;
                detail = "shape at base " + std::to_string(b);
                continue;
            }
            for (Int i = 0; i < 5; ++i) {
                const Int c = oasis.c_min + i;
                const Int a = oasis.fixed_points[static_cast<std::size_t>(i)];
                if (eval_happy(c, Base{b}, a) != a) {
                    ok = false;
                    detail = "unverified point at base " + std::to_string(b);
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    report("five-oasis-construction", ok, detail);
}

void check_translation() {
    bool ok = true;
    std::string detail;
    for (const auto& row : kPublishedTable) {
        const Base base{row.base};
        const Oasis oasis{base, row.c_min, row.c_max, row.length, row.points};
        for (Int t : {Int{1}, Int{2}, Int{5}}) {
            try {
                const auto shifted = translate_oasis(oasis, t);
                if (shifted.length != oasis.length) {
                    ok = false;
                    detail = "length changed at base " + std::to_string(row.base);
                    continue;
                }
                for (Int i = 0; i < shifted.length; ++i) {
                    const Int c = shifted.c_min + i;
                    const Int a =
                        shifted.fixed_points[static_cast<std::size_t>(i)];
                    if (eval_happy(c, base, a) != a) {
                        ok = false;
                        detail = "unverified pair at base " +
                                 std::to_string(row.base);
                    }
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
        }
    }
    report("oasis-translation", ok, detail);
}

void check_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (Int b = 2; b <= 10; ++b) {
        const Base base{b};
        Int pow5 = 1;
        for (int i = 0; i < 5; ++i)
            pow5 *= b;

        // Independent oracle: exhaustive fixed-point test below b^5.
        std::map<Int, std::vector<Int>> oracle;
        for (Int a = 1; a < pow5; ++a) {
            const Int c = a - sum_of_digit_squares(a, base);
            if (c >= 0 && c <= 600 && eval_happy(c, base, a) == a)
                oracle[c].push_back(a);
        }

        for (Int c = 0; c <= 600 && ok; ++c) {
            const auto got = fixed_points(c, base);
            std::vector<Int> below;
            for (Int a : got) {
                if (eval_happy(c, base, a) != a) {
                    ok = false;
                    detail = "spurious value at base " + std::to_string(b);
                }
                if (a < pow5)
                    below.push_back(a);
            }
            const auto it = oracle.find(c);
            const std::vector<Int> want =
                it == oracle.end() ? std::vector<Int>{} : it->second;
            if (below != want) {
                ok = false;
                detail = "set mismatch at base " + std::to_string(b) +
                         " constant " + std::to_string(c);
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        ok = false;
        detail = "exceeded one minute";
    }
    report("engine-oracle-equivalence", ok, detail);
}

void check_digit_theorem_scans() {
    bool ok = true;
    std::string detail;
    for (Int b = 2; b <= 12; b += 2) {
        const Base base{b};
        for (const auto& oasis : oasis_scan(base, 0, base.cube())) {
            const auto result = check_digit_theorems(oasis);
            if (!result.passed()) {
                ok = false;
                detail = "base " + std::to_string(b) + " oasis starting at " +
                         std::to_string(oasis.c_min);
            }
        }
    }
    report("digit-theorems", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string golden_dir = argc > 1 ? argv[1] : "";
    check_table1_reproduction(golden_dir);
    check_final_theorem();
    check_odd_bases();
    check_length_bound();
    check_base6_mirage();
    check_construction();
    check_translation();
    check_oracle_equivalence();
    check_digit_theorem_scans();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
