#include "oasislab/cli.hpp"

#include "oasislab/report.hpp"
#include "oasislab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <string>

namespace oasislab {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Int elapsed_ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

int threads_from_env() {
    const char* raw = std::getenv("OASIS_LAB_THREADS");
    if (raw == nullptr || *raw == '\0')
        return 1;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0)
        return 1;
    return static_cast<int>(value);
}

struct CommandContext {
    std::string format = "text";
    int threads = -1;  // -1: take OASIS_LAB_THREADS, default 1; 0: auto
    bool digits = false;

    Format parsed_format() const {
        const auto f = parse_format(format);
        if (!f)
            throw CLI::ValidationError("--format", "expected text, json or csv");
        return *f;
    }

    int effective_threads() const {
        return threads < 0 ? threads_from_env() : threads;
    }
};

void add_common(CLI::App* cmd, CommandContext& ctx, bool with_digits = true) {
    cmd->add_option("--format", ctx.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--threads", ctx.threads,
                    "Worker threads for scans (0 = auto)")
        ->check(CLI::NonNegativeNumber);
    if (with_digits)
        cmd->add_flag("--digits", ctx.digits,
                      "Also print values as base-b digits in text output");
}

void emit_scalar(std::ostream& out, const CommandContext& ctx, Int base,
                 const std::string& command,
                 const std::vector<std::pair<std::string, std::string>>& fields,
                 const std::string& text_line) {
    switch (ctx.parsed_format()) {
    case Format::text:
        out << text_line << '\n';
        return;
    case Format::json: {
        ordered_json j;
        j["base"] = base;
        j["command"] = command;
        for (const auto& [key, value] : fields) {
            if (value == "none")
                j[key] = nullptr;
            else
                j[key] = std::stoll(value);
        }
        j["tool_version"] = std::string(kToolVersion);
        out << j.dump(2) << '\n';
        return;
    }
    case Format::csv: {
        std::string header = "base,command";
        std::string row = std::to_string(base) + "," + command;
        for (const auto& [key, value] : fields) {
            header += "," + key;
            row += "," + value;
        }
        out << header << '\n' << row << '\n';
        return;
    }
    }
}

Oasis oasis_from_range(Base base, Int c_min, Int c_max) {
    if (c_min < 0 || c_min > c_max)
        throw std::invalid_argument("invalid constant range");
    Oasis oasis{base, c_min, c_max, c_max - c_min + 1, {}};
    for (Int c = c_min; c <= c_max; ++c) {
        const auto a = smallest_fixed_point(c, base);
        if (!a)
            throw std::invalid_argument(
                "constant " + std::to_string(c) +
                " has no fixed point; the range is not an oasis");
        oasis.fixed_points.push_back(*a);
    }
    return oasis;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Fixed points, oases and mirages of augmented happy functions"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommandContext ctx;

    Int base_value = 0;
    Int constant = 0;
    Int argument = 0;
    Int lo = 0;
    Int hi = 0;
    Int c_min = 0;
    Int c_max = 0;
    Int shift_count = 1;
    Int max_base = 20;
    bool all_runs = false;

    auto* eval = app.add_subcommand("eval", "Apply the happy function once");
    eval->add_option("--base", base_value, "Number base")->required();
    eval->add_option("--constant", constant, "Augmenting constant")
        ->required()
        ->check(CLI::NonNegativeNumber);
    eval->add_option("a", argument, "Argument (positive integer)")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(eval, ctx);

    auto* constant_of =
        app.add_subcommand("constant-of", "Constant for which a is fixed");
    constant_of->add_option("--base", base_value, "Number base")->required();
    constant_of->add_option("a", argument, "Candidate fixed point")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(constant_of, ctx);

    auto* fps = app.add_subcommand("fixed-points",
                                   "All fixed points for one constant");
    fps->add_option("--base", base_value, "Number base")->required();
    fps->add_option("--constant", constant, "Augmenting constant")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(fps, ctx);

    auto* scan = app.add_subcommand("oasis-scan",
                                    "Maximal oases in a constant interval");
    scan->add_option("--base", base_value, "Number base")->required();
    scan->add_option("--lo", lo, "Lowest constant")
        ->required()
        ->check(CLI::NonNegativeNumber);
    scan->add_option("--hi", hi, "Highest constant")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(scan, ctx);

    auto* mirage = app.add_subcommand("mirage-max",
                                      "Maximal mirage runs over r < b^3");
    mirage->add_option("--base", base_value, "Number base")->required();
    mirage->add_flag("--all", all_runs, "Report every maximal run");
    add_common(mirage, ctx);

    auto* oasis_max_cmd = app.add_subcommand(
        "oasis-max", "Maximal oasis length and its minimal example");
    oasis_max_cmd->add_option("--base", base_value, "Number base")->required();
    add_common(oasis_max_cmd, ctx);

    auto* construct = app.add_subcommand(
        "construct", "Explicit 5-oasis for an even base >= 6");
    construct->add_option("--base", base_value, "Number base")->required();
    add_common(construct, ctx);

    auto* translate =
        app.add_subcommand("translate", "Shift an oasis to a new one");
    translate->add_option("--base", base_value, "Number base")->required();
    translate->add_option("--c-min", c_min, "First constant of the oasis")
        ->required()
        ->check(CLI::NonNegativeNumber);
    translate->add_option("--c-max", c_max, "Last constant of the oasis")
        ->required()
        ->check(CLI::NonNegativeNumber);
    translate->add_option("-t,--t", shift_count, "Translation multiplier")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(translate, ctx);

    auto* table = app.add_subcommand(
        "table1", "Minimal maximal-length oases for even bases");
    table->add_option("--max-base", max_base, "Largest (even) base")
        ->check(CLI::PositiveNumber);
    add_common(table, ctx);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--base", base_value, "Number base")->required();
    add_common(verify, ctx, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        const int threads = ctx.effective_threads();
        const auto start = Clock::now();

        if (eval->parsed()) {
            const Base b{base_value};
            const Int value = eval_happy(constant, b, argument);
            std::string line = std::to_string(value);
            if (ctx.digits)
                line += "[" + to_base_string(value, b) + "]";
            emit_scalar(out, ctx, b.value(), "eval",
                        {{"constant", std::to_string(constant)},
                         {"argument", std::to_string(argument)},
                         {"value", std::to_string(value)}},
                        line);
            return 0;
        }
        if (constant_of->parsed()) {
            const Base b{base_value};
            const auto c = constant_of_fixed_point(argument, b);
            const std::string rendered = c ? std::to_string(*c) : "none";
            emit_scalar(out, ctx, b.value(), "constant-of",
                        {{"argument", std::to_string(argument)},
                         {"constant", rendered}},
                        rendered);
            return 0;
        }
        if (fps->parsed()) {
            const Base b{base_value};
            const Int bound = search_bound(constant, b);
            const auto points = fixed_points(constant, b, threads);
            switch (ctx.parsed_format()) {
            case Format::text: {
                for (std::size_t i = 0; i < points.size(); ++i) {
                    if (i > 0)
                        out << ' ';
                    out << points[i];
                    if (ctx.digits)
                        out << '[' << to_base_string(points[i], b) << ']';
                }
                out << '\n';
                break;
            }
            case Format::json: {
                ordered_json j;
                j["base"] = b.value();
                j["command"] = "fixed-points";
                j["constant"] = constant;
                j["bound"] = bound;
                j["fixed_points"] = points;
                j["elapsed_ms"] = elapsed_ms_since(start);
                j["tool_version"] = std::string(kToolVersion);
                out << j.dump(2) << '\n';
                break;
            }
            case Format::csv: {
                std::string joined;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    if (i > 0)
                        joined += ';';
                    joined += std::to_string(points[i]);
                }
                out << "base,constant,bound,fixed_points\n"
                    << b.value() << ',' << constant << ',' << bound << ",\""
                    << joined << "\"\n";
                break;
            }
            }
            return 0;
        }
        if (scan->parsed()) {
            const Base b{base_value};
            SearchReport report;
            report.base = b.value();
            report.command = "oasis-scan";
            report.bound = search_bound(hi, b);
            for (const auto& oasis : oasis_scan(b, lo, hi, threads))
                report.runs.push_back(to_entry(oasis));
            report.elapsed_ms = elapsed_ms_since(start);
            out << render_report(report, ctx.parsed_format(), ctx.digits);
            return 0;
        }
        if (mirage->parsed()) {
            const Base b{base_value};
            const auto runs = maximal_mirage_runs(b, threads);
            Int longest = 0;
            for (const auto& run : runs)
                longest = std::max(longest, run.length);
            SearchReport report;
            report.base = b.value();
            report.command = "mirage-max";
            for (const auto& run : runs)
                if (all_runs || run.length == longest)
                    report.runs.push_back(to_entry(run));
            report.elapsed_ms = elapsed_ms_since(start);
            out << render_report(report, ctx.parsed_format(), ctx.digits);
            return 0;
        }
        if (oasis_max_cmd->parsed()) {
            const Base b{base_value};
            const auto result = max_oasis(b, threads);
            SearchReport report;
            report.base = b.value();
            report.command = "oasis-max";
            report.bound = result.mirage_length;
            report.runs.push_back(to_entry(result.oasis));
            report.elapsed_ms = elapsed_ms_since(start);
            out << render_report(report, ctx.parsed_format(), ctx.digits);
            if (result.length != result.mirage_length)
                err << "note: maximal mirage length " << result.mirage_length
                    << " differs from measured maximal oasis length "
                    << result.length << " in base " << b.value() << '\n';
            return 0;
        }
        if (construct->parsed()) {
            const Base b{base_value};
            SearchReport report;
            report.base = b.value();
            report.command = "construct";
            report.runs.push_back(to_entry(construct_5_oasis(b)));
            report.elapsed_ms = elapsed_ms_since(start);
            out << render_report(report, ctx.parsed_format(), ctx.digits);
            return 0;
        }
        if (translate->parsed()) {
            const Base b{base_value};
            const auto source = oasis_from_range(b, c_min, c_max);
            SearchReport report;
            report.base = b.value();
            report.command = "translate";
            report.runs.push_back(to_entry(translate_oasis(source, shift_count)));
            report.elapsed_ms = elapsed_ms_since(start);
            out << render_report(report, ctx.parsed_format(), ctx.digits);
            return 0;
        }
        if (table->parsed()) {
            out << render_table1(table1(max_base, threads), ctx.parsed_format(),
                                 ctx.digits);
            return 0;
        }
        if (verify->parsed()) {
            const Base b{base_value};
            return verify_base(b, threads, out) ? 0 : 4;
        }
        err << "error: no subcommand given\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace oasislab
