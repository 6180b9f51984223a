#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "crossfam/report.hpp"

using namespace crossfam;
using nlohmann::json;

namespace {

Report sample_report() {
    Report rep;
    rep.command = "bound";
    rep.instance = {{"n", 9}, {"ks", {4, 3, 2}}};
    rep.results["bound"] = to_json(Natural(99));
    rep.results["branch_values"] = {to_json(Natural(99)), to_json(Natural(92))};
    rep.checks.push_back({"oracle-equals-bound", true, ""});
    rep.timing_ms = 12;
    return rep;
}

}  // namespace

TEST_CASE("big integers serialize as decimal strings") {
    Natural huge("123456789012345678901234567890");
    CHECK(to_json(huge) == "123456789012345678901234567890");
}

TEST_CASE("JSON emission is deterministic and key-sorted") {
    Report rep = sample_report();
    std::string a = emit_json(rep);
    std::string b = emit_json(rep);
    CHECK(a == b);
    CHECK(a.find("\"bound\": \"99\"") != std::string::npos);
    // nlohmann objects iterate in sorted key order.
    CHECK(a.find("\"checks\"") < a.find("\"command\""));
    CHECK(a.find("\"command\"") < a.find("\"results\""));
}

TEST_CASE("CSV quoting follows RFC 4180") {
    Report rep;
    rep.command = "size";
    rep.results["id"] = "2,3,5";
    rep.results["note"] = "say \"hi\"";
    std::string csv = emit_csv(rep);
    CHECK(csv.find("\"2,3,5\"") != std::string::npos);
    CHECK(csv.find("\"say \"\"hi\"\"\"") != std::string::npos);
    CHECK(csv.rfind("\r\n") == csv.size() - 2);
    CHECK(csv.find("key,value\r\n") == 0);
}

TEST_CASE("CSV row mode emits a header plus one line per row") {
    Report rep;
    rep.command = "f-scan";
    rep.results["rows"] = json::array();
    for (int r = 0; r < 7; ++r)
        rep.results["rows"].push_back(
            {{"rank_offset", std::to_string(r)}, {"id", "1"}, {"f", "10"}});
    std::string csv = emit_csv(rep);
    int lines = 0;
    for (std::size_t p = 0; (p = csv.find("\r\n", p)) != std::string::npos; ++p)
        ++lines;
    CHECK(lines == 8);  // header + 7 rows
}

TEST_CASE("reports validate against the shipped schema") {
    std::ifstream in(SCHEMA_PATH);
    REQUIRE(in.good());
    json schema = json::parse(in);
    std::string err;
    CHECK(validate_against_schema(sample_report().to_json(), schema, &err));
    CHECK(err.empty());

    json bad = sample_report().to_json();
    bad.erase("results");
    CHECK(!validate_against_schema(bad, schema, &err));
    CHECK(!err.empty());

    json wrong_cmd = sample_report().to_json();
    wrong_cmd["command"] = "frobnicate";
    CHECK(!validate_against_schema(wrong_cmd, schema, &err));

    json extra = sample_report().to_json();
    extra["surprise"] = 1;
    CHECK(!validate_against_schema(extra, schema, &err));
}

TEST_CASE("text mode renders checks") {
    Report rep = sample_report();
    std::string text = emit_text(rep);
    CHECK(text.find("PASS oracle-equals-bound") != std::string::npos);
    CHECK(emit(rep, "text") == text);
    CHECK_THROWS(emit(rep, "yaml"));
}
