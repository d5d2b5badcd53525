#include "oasislab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace oasislab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_quote(const std::string& field) {
    return "\"" + field + "\"";
}

std::string join_witness_values(const ReportEntry& entry) {
    std::string out;
    for (std::size_t i = 0; i < entry.witnesses.size(); ++i) {
        if (i > 0)
            out += ';';
        out += std::to_string(entry.witnesses[i].second);
    }
    return out;
}

void append_entry_text(std::ostream& os, const ReportEntry& entry, Base base,
                       bool base_digits) {
    os << entry.kind << " [" << entry.min << ".." << entry.max
       << "] length=" << entry.length << " witnesses=";
    for (std::size_t i = 0; i < entry.witnesses.size(); ++i) {
        if (i > 0)
            os << ';';
        os << entry.witnesses[i].first << ':' << entry.witnesses[i].second;
        if (base_digits)
            os << '[' << to_base_string(entry.witnesses[i].second, base) << ']';
    }
    if (entry.truncated_lo)
        os << " truncated_lo";
    if (entry.truncated_hi)
        os << " truncated_hi";
    os << '\n';
}

ordered_json entry_to_json(const ReportEntry& entry) {
    ordered_json j;
    j["kind"] = entry.kind;
    j["min"] = entry.min;
    j["max"] = entry.max;
    j["length"] = entry.length;
    if (entry.truncated_lo)
        j["truncated_lo"] = true;
    if (entry.truncated_hi)
        j["truncated_hi"] = true;
    auto& witnesses = j["witnesses"] = ordered_json::array();
    for (const auto& [value, witness] : entry.witnesses) {
        ordered_json w;
        w["value"] = value;
        w["witness"] = witness;
        witnesses.push_back(std::move(w));
    }
    return j;
}

ReportEntry entry_from_json(const ordered_json& j) {
    ReportEntry entry;
    entry.kind = j.at("kind").get<std::string>();
    entry.min = j.at("min").get<Int>();
    entry.max = j.at("max").get<Int>();
    entry.length = j.at("length").get<Int>();
    entry.truncated_lo = j.value("truncated_lo", false);
    entry.truncated_hi = j.value("truncated_hi", false);
    for (const auto& w : j.at("witnesses"))
        entry.witnesses.emplace_back(w.at("value").get<Int>(),
                                     w.at("witness").get<Int>());
    return entry;
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return std::nullopt;
}

ReportEntry to_entry(const Run& run) {
    ReportEntry entry;
    entry.kind = std::string(to_string(run.kind));
    entry.min = run.d_min;
    entry.max = run.d_max;
    entry.length = run.length;
    for (Int d = run.d_min; d <= run.d_max; ++d)
        entry.witnesses.emplace_back(
            d, run.witnesses[static_cast<std::size_t>(d - run.d_min)]);
    return entry;
}

ReportEntry to_entry(const Oasis& oasis) {
    ReportEntry entry;
    entry.kind = "oasis";
    entry.min = oasis.c_min;
    entry.max = oasis.c_max;
    entry.length = oasis.length;
    entry.truncated_lo = oasis.truncated_lo;
    entry.truncated_hi = oasis.truncated_hi;
    for (Int c = oasis.c_min; c <= oasis.c_max; ++c)
        entry.witnesses.emplace_back(
            c, oasis.fixed_points[static_cast<std::size_t>(c - oasis.c_min)]);
    return entry;
}

std::string render_report(const SearchReport& report, Format format,
                          bool base_digits) {
    switch (format) {
    case Format::json: {
        ordered_json j;
        j["base"] = report.base;
        j["command"] = report.command;
        if (report.bound)
            j["bound"] = *report.bound;
        auto& runs = j["runs"] = ordered_json::array();
        for (const auto& entry : report.runs)
            runs.push_back(entry_to_json(entry));
        j["elapsed_ms"] = report.elapsed_ms;
        j["tool_version"] = report.tool_version;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "base,kind,min,max,length,witnesses\n";
        for (const auto& entry : report.runs) {
            out += std::to_string(report.base) + "," + entry.kind + "," +
                   std::to_string(entry.min) + "," + std::to_string(entry.max) +
                   "," + std::to_string(entry.length) + "," +
                   csv_quote(join_witness_values(entry)) + "\n";
        }
        return out;
    }
    case Format::text: {
        std::ostringstream os;
        os << "command=" << report.command << " base=" << report.base;
        if (report.bound)
            os << " bound=" << *report.bound;
        os << " elapsed_ms=" << report.elapsed_ms
           << " tool_version=" << report.tool_version << '\n';
        const Base base{report.base};
        for (const auto& entry : report.runs)
            append_entry_text(os, entry, base, base_digits);
        return os.str();
    }
    }
    throw std::logic_error("unreachable format");
}

SearchReport report_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    SearchReport report;
    report.base = j.at("base").get<Int>();
    report.command = j.at("command").get<std::string>();
    if (j.contains("bound"))
        report.bound = j.at("bound").get<Int>();
    for (const auto& entry : j.at("runs"))
        report.runs.push_back(entry_from_json(entry));
    report.elapsed_ms = j.at("elapsed_ms").get<Int>();
    report.tool_version = j.at("tool_version").get<std::string>();
    return report;
}

std::vector<Table1Row> table1(Int b_max, int threads) {
    if (b_max < 2 || b_max % 2 != 0)
        throw std::invalid_argument("table covers even bases 2..b_max");
    std::vector<Table1Row> rows;
    for (Int b = 2; b <= b_max; b += 2) {
        const auto result = max_oasis(Base{b}, threads);
        rows.push_back(Table1Row{b, result.length, result.oasis.c_min,
                                 result.oasis.c_max,
                                 result.oasis.fixed_points});
    }
    return rows;
}

std::string render_table1(const std::vector<Table1Row>& rows, Format format,
                          bool base_digits) {
    switch (format) {
    case Format::json: {
        ordered_json j;
        j["command"] = "table1";
        j["max_base"] = rows.empty() ? 0 : rows.back().base;
        j["tool_version"] = std::string(kToolVersion);
        auto& out = j["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["base"] = row.base;
            r["length"] = row.length;
            r["min"] = row.c_min;
            r["max"] = row.c_max;
            r["smallest_fixed_points"] = row.smallest_fixed_points;
            out.push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "base,kind,min,max,length,witnesses\n";
        for (const auto& row : rows) {
            std::string points;
            for (std::size_t i = 0; i < row.smallest_fixed_points.size(); ++i) {
                if (i > 0)
                    points += ';';
                points += std::to_string(row.smallest_fixed_points[i]);
            }
            out += std::to_string(row.base) + ",oasis," +
                   std::to_string(row.c_min) + "," + std::to_string(row.c_max) +
                   "," + std::to_string(row.length) + "," + csv_quote(points) +
                   "\n";
        }
        return out;
    }
    case Format::text: {
        std::ostringstream os;
        for (const auto& row : rows) {
            os << "base=" << row.base << " length=" << row.length << " oasis=["
               << row.c_min << ".." << row.c_max << "] smallest_fixed_points=";
            const Base base{row.base};
            for (std::size_t i = 0; i < row.smallest_fixed_points.size(); ++i) {
                if (i > 0)
                    os << ';';
                os << row.smallest_fixed_points[i];
                if (base_digits)
                    os << '['
                       << to_base_string(row.smallest_fixed_points[i], base)
                       << ']';
            }
            os << '\n';
        }
        return os.str();
    }
    }
    throw std::logic_error("unreachable format");
}

} // namespace oasislab
