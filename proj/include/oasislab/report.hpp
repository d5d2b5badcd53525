#pragma once

#include "oasislab/oasis.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oasislab {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view name);

/// One reported run: a mirage run (value = d, witness = r) or an oasis
/// (value = c, witness = fixed point).
struct ReportEntry {
    std::string kind;
    Int min = 0;
    Int max = 0;
    Int length = 0;
    std::vector<std::pair<Int, Int>> witnesses;
    bool truncated_lo = false;
    bool truncated_hi = false;

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

ReportEntry to_entry(const Run& run);
ReportEntry to_entry(const Oasis& oasis);

struct SearchReport {
    Int base = 0;
    std::string command;
    std::optional<Int> bound;
    std::vector<ReportEntry> runs;
    Int elapsed_ms = 0;
    std::string tool_version = std::string(kToolVersion);

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Deterministic rendering; same report, same bytes. JSON keys are emitted
/// in schema order. CSV columns: base,kind,min,max,length,witnesses with the
/// witness list semicolon-joined in one quoted field. base_digits adds a
/// base-b rendering after each witness in text output.
std::string render_report(const SearchReport& report, Format format,
                          bool base_digits = false);

SearchReport report_from_json(const std::string& text);

struct Table1Row {
    Int base;
    Int length;
    Int c_min;
    Int c_max;
    std::vector<Int> smallest_fixed_points;

    friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// One row per even base <= b_max: maximal oasis length, the minimal
/// maximal-length oasis and its smallest fixed points.
std::vector<Table1Row> table1(Int b_max, int threads = 1);

/// Byte-stable in every format (no timing fields).
std::string render_table1(const std::vector<Table1Row>& rows, Format format,
                          bool base_digits = false);

} // namespace oasislab
