#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "dacs/io.hpp"

using namespace dacs;

TEST_CASE("complex literals round-trip") {
    for (complexd z : {complexd{0.5, 0.2}, complexd{-0.3, -0.25}, complexd{1.5, 0.0},
                       complexd{0.0, 0.3}, complexd{1.0 / 3.0, -2.0 / 7.0}}) {
        CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK(parse_complex("0.5+0.2i") == complexd{0.5, 0.2});
    CHECK(parse_complex("-1.5") == complexd{-1.5, 0.0});
    CHECK(parse_complex("0.3i") == complexd{0.0, 0.3});
    CHECK(parse_complex("1e-3+2e-4i") == complexd{1e-3, 2e-4});

    CHECK_THROWS_AS(parse_complex(""), config_error);
    CHECK_THROWS_AS(parse_complex("abc"), config_error);
    CHECK_THROWS_AS(parse_complex("0.5+i"), config_error);
    CHECK_THROWS_AS(parse_complex("0.5+0.2j"), config_error);
    CHECK_THROWS_AS(parse_complex("0.5+0.2i junk"), config_error);
}

TEST_CASE("doubles serialize with 17 significant digits and re-parse exactly") {
    for (double x : {1.0 / 3.0, 0.1875, 1e-300, -2.5e17, 3.141592653589793}) {
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("csv tables round-trip") {
    table t;
    t.meta = "command=state algebra=su11 h0=0.25 dim=4 param=0.5+0i";
    t.header = {"n", "weight", "coeff_re"};
    t.rows = {{"0", "0.25", "1"}, {"1", "1.25", format_double(1.0 / 3.0)}};

    std::ostringstream os;
    write_csv(os, t);
    std::istringstream is(os.str());
    const table back = read_csv(is);

    CHECK(back.meta == t.meta);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);

    // serialization is stable under a second round trip
    std::ostringstream os2;
    write_csv(os2, back);
    CHECK(os2.str() == os.str());
}

TEST_CASE("csv reader rejects malformed input") {
    std::istringstream no_meta("a,b\n1,2\n");
    CHECK_THROWS_AS(read_csv(no_meta), config_error);
    std::istringstream ragged("# m\na,b\n1,2,3\n");
    CHECK_THROWS_AS(read_csv(ragged), config_error);
}

TEST_CASE("meta strings parse as key=value pairs") {
    const auto kv = parse_meta("command=check algebra=higgs c=1 h=-0.5 dim=64");
    REQUIRE(kv.size() == 5);
    CHECK(kv[0] == std::pair<std::string, std::string>{"command", "check"});
    CHECK(kv[3].second == "-0.5");
    CHECK_THROWS_AS(parse_meta("novalue"), config_error);
}

TEST_CASE("report serialization carries status and non-finite residuals") {
    verification_report r;
    r.add("01_ok", 1e-12, 1e-10, "ctx");
    r.add("02_bad", 2e-3, 1e-10, "ctx");
    r.add_skip("03_skipped", "not applicable");
    r.add_failure("04_broken", "construction failed");

    CHECK(!r.overall_pass());

    const table t = report_to_table(r, "meta");
    CHECK(t.rows[0][1] == "pass");
    CHECK(t.rows[1][1] == "fail");
    CHECK(t.rows[2][1] == "skip");
    CHECK(t.rows[3][2] == "inf");

    const nlohmann::json j = report_to_json(r, "meta");
    CHECK(j["overall_pass"] == false);
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][0]["residual"].is_number());
    CHECK(j["rows"][3]["residual"].is_string()); // inf stays textual
    CHECK(j["rows"][2]["status"] == "skip");
}
