#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "famc/cli.hpp"
#include "famc/constants.hpp"
#include "famc/families.hpp"
#include "famc/report_json.hpp"
#include "famc/table_io.hpp"

using namespace famc;

namespace {

std::string data_path(const char* name) {
    return std::string(FAMC_TEST_DATA) + "/" + name;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table files load with labels") {
    GroupPtr s3 = load_group_file(data_path("s3_table.json"));
    CHECK(s3->order() == 6);
    CHECK(s3->has_labels());
    CHECK(s3->label(0) == "012");  // identity permutation in one-line notation

    CHECK_THROWS_AS(load_group_file(data_path("not_associative.json")),
                    NotAGroupError);
    CHECK_THROWS_AS(load_group_file(data_path("no_inverse.json")),
                    NotAGroupError);
    CHECK_THROWS_AS(load_group_file(data_path("malformed.json")),
                    NotAGroupError);
    CHECK_THROWS_AS(load_group_file(data_path("missing.json")),
                    NotAGroupError);
}

TEST_CASE("json round trip preserves the table") {
    GroupPtr s3 = load_group_file(data_path("s3_table.json"));
    GroupPtr back = load_group_string(group_to_json(*s3));
    CHECK(same_group(*s3, *back));
    CHECK(back->label(4) == s3->label(4));

    CHECK_THROWS_AS(load_group_string("{\"order\": 3}"), NotAGroupError);
    CHECK_THROWS_AS(load_group_string("[1,2,3]"), NotAGroupError);
}

TEST_CASE("report serializations") {
    AmenabilityReport r = amenability_report(parse_family("Hr(3,1)"), "Hr(3,1)");

    auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["group"] == "Hr(3,1)");
    CHECK(j["order"] == 27);
    CHECK(j["am"] == "7/3");
    CHECK(j["ad"] == "7/3");
    CHECK(j["bounds"]["lower"] == "7/3");
    CHECK(j["bounds"]["upper"] == 3);
    CHECK(j["bounds"]["improved"] == "7/3");
    CHECK(j["nu_omega"] == "1/3");
    CHECK(j["maxdeg"] == 3);
    CHECK(j["commutator_order"] == 3);
    CHECK(j["center_index"] == 9);
    CHECK(j["spectrum"] ==
          nlohmann::json::parse("[[1,9],[3,2]]"));
    CHECK(j["flags"]["abelian"] == false);
    CHECK(j["flags"]["two_degree"] == true);

    const std::string header = report_csv_header();
    CHECK(header.substr(0, 15) == "group,order,am,");
    const std::string row = report_csv_row(r);
    CHECK(row.find("\"Hr(3,1)\",27,7/3,7/3,") == 0);

    const std::string text = report_to_text(r);
    CHECK(text.find("am: 7/3 (~2.33333)") != std::string::npos);
    CHECK(text.find("spectrum: 1^9 3^2") != std::string::npos);
}

TEST_CASE("spectrum and decimal helpers") {
    CHECK(approx6(Rational(7, 3)) == "2.33333");
    CHECK(approx6(Rational(1)) == "1");
    CHECK(approx6(Rational(43, 7)) == "6.14286");
    DegreeSpectrum s;
    s.entries = {{1, 9}, {3, 2}};
    CHECK(spectrum_str(s) == "1^9 3^2");

    CHECK(csv_field("D(5)") == "D(5)");
    CHECK(csv_field("Hr(2,1)") == "\"Hr(2,1)\"");
    CHECK(csv_field("say \"hi\", twice") == "\"say \"\"hi\"\", twice\"");
}

TEST_CASE("cli report") {
    CliResult r = cli({"report", "--group", "Hr(3,1)", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["am"] == "7/3");

    r = cli({"report", "--group", "C(5)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("am: 1") != std::string::npos);

    r = cli({"report", "--table", data_path("s3_table.json"), "--format",
             "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",6,5/3,5/3,") != std::string::npos);

    // convenience: a .json argument to --group is treated as a table path
    r = cli({"report", "--group", data_path("s3_table.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("am: 5/3") != std::string::npos);
}

TEST_CASE("cli failure exit codes") {
    CHECK(cli({"report", "--table", data_path("malformed.json")}).code == 2);
    CHECK(cli({"report", "--group", "E(3)"}).code == 2);
    CHECK(cli({"report"}).code == 2);
    CHECK(cli({"report", "--group", "C(3)", "--table", "x.json"}).code == 2);
    CHECK(cli({"report", "--group", "C(3)", "--format", "yaml"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"report", "--group", "C(2000000)"}).code == 3);
    CHECK(cli({"report", "--group", "C(50)", "--max-order", "10"}).code == 3);
    CHECK(cli({"verify", "products", "--group", "C(2)"}).code == 2);
    CHECK(cli({"verify", "unknown-theorem", "--group", "C(2)"}).code == 2);
    CHECK(cli({"hr-sequence", "--p", "6"}).code == 2);

    CliResult help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("report") != std::string::npos);
}

TEST_CASE("cli verify") {
    CHECK(cli({"verify", "two-degree", "--group", "D(7)"}).code == 0);
    CHECK(cli({"verify", "johnson-vs-ad", "--group", "Q8xC(3)"}).code == 0);
    CHECK(cli({"verify", "minimal", "--table", data_path("s3_table.json")})
              .code == 0);
    CHECK(cli({"verify", "minimal", "--group", data_path("s3_table.json")})
              .code == 0);
    CHECK(cli({"verify", "products", "--group", "Q8", "--group2", "D(3)"})
              .code == 0);
    CHECK(cli({"verify", "key-trick", "--group", "Q8", "--trials", "100"})
              .code == 0);
    CHECK(cli({"verify", "plancherel", "--group", "D(4)", "--trials", "25"})
              .code == 0);
    CHECK(cli({"verify", "muK", "--group", "Hr(3,1)"}).code == 0);
    CHECK(cli({"verify", "al", "--trials", "20"}).code == 0);

    CliResult r = cli({"verify", "two-degree", "--group", "D(7)"});
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("13/7") != std::string::npos);

    // not-applicable cases do not fail the run
    r = cli({"verify", "two-degree", "--group", "C(6)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("not-applicable") != std::string::npos);
}

TEST_CASE("cli scan") {
    CliResult r = cli({"scan", "C(3)", "Hr(2,1)", "D(5)"});
    CHECK(r.code == 0);
    // one csv row per group plus header and summary
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].find("group,order,am") == 0);
    CHECK(rows[1].find("C(3),3,1,") == 0);
    CHECK(rows[2].find("\"Hr(2,1)\",8,3/2,") == 0);
    CHECK(rows[3].find("D(5),10,9/5,") == 0);
    CHECK(rows[4].find("# scanned=3 failed=0") == 0);

    // deterministic output
    CliResult again = cli({"scan", "C(3)", "Hr(2,1)", "D(5)"});
    CHECK(again.out == r.out);

    // a failing row flips the exit code but the others still report
    r = cli({"scan", "C(3)", "E(9)", "D(5)"});
    CHECK(r.code == 1);
    CHECK(r.out.find("C(3),3,1,") != std::string::npos);
    CHECK(r.out.find("expected a family atom") != std::string::npos);
    CHECK(r.out.find("failed=1") != std::string::npos);

    // directory mode picks up the fixtures that actually parse
    r = cli({"scan", "--dir", FAMC_TEST_DATA});
    CHECK(r.code == 1);  // bad fixtures are rows that fail
    CHECK(r.out.find("s3_table.json") != std::string::npos);
    CHECK(r.out.find("s4_table.json") != std::string::npos);
    CHECK(r.out.find(",24,8/3,") != std::string::npos);

    CHECK(cli({"scan"}).code == 2);
}

TEST_CASE("cli scan json") {
    CliResult r = cli({"scan", "C(4)", "Q8", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["group"] == "C(4)");
    CHECK(j["rows"][1]["am"] == "3/2");
    CHECK(j["summary"]["scanned"] == 2);
    CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("cli hr-sequence and al-check") {
    CliResult r = cli({"hr-sequence", "--p", "3", "--N", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("expected: 7/3 (~2.33333)") != std::string::npos);
    CHECK(r.out.find("Hr(3,2): am = 7/3") != std::string::npos);
    CHECK(r.out.find("all_match: yes") != std::string::npos);

    // default count stops at order 512
    r = cli({"hr-sequence", "--p", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Hr(2,4)") != std::string::npos);
    CHECK(r.out.find("Hr(2,5)") == std::string::npos);

    r = cli({"al-check", "--n", "2", "--d", "2", "--trials", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);

    r = cli({"al-check", "--n", "1", "--d", "2", "--trials", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("witness_found: yes") != std::string::npos);

    CHECK(cli({"al-check", "--n", "5", "--d", "2"}).code == 3);
}

TEST_CASE("cli seed determinism") {
    CliResult a = cli({"verify", "key-trick", "--group", "D(4)", "--trials",
                       "10", "--seed", "99"});
    CliResult b = cli({"verify", "key-trick", "--group", "D(4)", "--trials",
                       "10", "--seed", "99"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
