#include "oasislab/report.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace oasislab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SearchReport sample_report() {
    SearchReport report;
    report.base = 6;
    report.command = "mirage-max";
    report.bound = 216;
    for (const auto& run : maximal_mirage_runs(Base{6}))
        if (run.length == 5)
            report.runs.push_back(to_entry(run));
    report.elapsed_ms = 3;
    return report;
}

} // namespace

TEST_CASE("format names") {
    CHECK(parse_format("text") == Format::text);
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_FALSE(parse_format("yaml").has_value());
}

TEST_CASE("rendering is deterministic") {
    const auto report = sample_report();
    for (Format f : {Format::text, Format::json, Format::csv})
        CHECK(render_report(report, f) == render_report(report, f));
}

TEST_CASE("json round-trips every field") {
    const auto report = sample_report();
    CHECK(report_from_json(render_report(report, Format::json)) == report);

    SearchReport no_bound = report;
    no_bound.bound.reset();
    CHECK(report_from_json(render_report(no_bound, Format::json)) == no_bound);
}

TEST_CASE("json keys follow the schema order") {
    const auto text = render_report(sample_report(), Format::json);
    const auto base_pos = text.find("\"base\"");
    const auto command_pos = text.find("\"command\"");
    const auto bound_pos = text.find("\"bound\"");
    const auto runs_pos = text.find("\"runs\"");
    const auto elapsed_pos = text.find("\"elapsed_ms\"");
    const auto version_pos = text.find("\"tool_version\"");
    REQUIRE(version_pos != std::string::npos);
    CHECK(base_pos < command_pos);
    CHECK(command_pos < bound_pos);
    CHECK(bound_pos < runs_pos);
    CHECK(runs_pos < elapsed_pos);
    CHECK(elapsed_pos < version_pos);
}

TEST_CASE("csv carries the exact header and quoted witness list") {
    const auto csv = render_report(sample_report(), Format::csv);
    CHECK(csv.rfind("base,kind,min,max,length,witnesses\n", 0) == 0);
    CHECK(csv.find("6,mirage-only,-4,0,5,\"16;22;2;9;1\"") != std::string::npos);
    CHECK(csv.find("6,oasis,5,9,5,\"6;14;20;12;18\"") != std::string::npos);
}

TEST_CASE("negative values render with a minus sign everywhere") {
    const auto report = sample_report();
    const auto json = render_report(report, Format::json);
    const auto text = render_report(report, Format::text);
    CHECK(json.find("\"min\": -4") != std::string::npos);
    CHECK(text.find("[-4..0]") != std::string::npos);
    CHECK(text.find("-4:16") != std::string::npos);
}

TEST_CASE("text format carries optional base digits") {
    SearchReport report;
    report.base = 16;
    report.command = "oasis-scan";
    Oasis pair{Base{16}, 44, 45, 2, {133, 271}};
    report.runs.push_back(to_entry(pair));
    const auto plain = render_report(report, Format::text);
    CHECK(plain.find("44:133") != std::string::npos);
    const auto annotated = render_report(report, Format::text, true);
    CHECK(annotated.find("44:133[85]") != std::string::npos);
    CHECK(annotated.find("45:271[10(15)]") != std::string::npos);
}

TEST_CASE("truncation flags surface in text and json") {
    SearchReport report;
    report.base = 6;
    report.command = "oasis-scan";
    Oasis cut{Base{6}, 6, 8, 3, {14, 20, 12}, true, true};
    report.runs.push_back(to_entry(cut));
    const auto text = render_report(report, Format::text);
    CHECK(text.find("truncated_lo") != std::string::npos);
    CHECK(text.find("truncated_hi") != std::string::npos);
    const auto round = report_from_json(render_report(report, Format::json));
    CHECK(round.runs[0].truncated_lo);
    CHECK(round.runs[0].truncated_hi);
}

TEST_CASE("table rows reproduce the published values") {
    const auto rows = table1(20);
    REQUIRE(rows.size() == 10);

    CHECK(rows[0] == Table1Row{2, 2, 3, 4, {4, 6}});
    CHECK(rows[6] ==
          Table1Row{14, 8, 421, 428, {434, 451, 601, 480, 494, 450, 465, 448}});
    CHECK(rows[9] ==
          Table1Row{20, 9, 5124, 5132,
                    {5383, 5362, 5699, 5360, 5382, 5402, 5380, 5400, 5617}});

    CHECK_THROWS_AS(table1(21), std::invalid_argument);
    CHECK_THROWS_AS(table1(0), std::invalid_argument);
}

TEST_CASE("table renderings match the golden files byte for byte") {
    const auto rows = table1(20);
    const std::string golden = OASISLAB_GOLDEN_DIR;
    CHECK(render_table1(rows, Format::csv) == read_file(golden + "/table1.csv"));
    CHECK(render_table1(rows, Format::json) ==
          read_file(golden + "/table1.json"));
    CHECK(render_table1(rows, Format::text) ==
          read_file(golden + "/table1.txt"));
}
