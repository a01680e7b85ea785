#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "deltafock/export.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace deltafock;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    return out;
}

void check_envelope(const json& j, const std::string& command)
{
    CHECK(j.at("command") == command);
    CHECK(j.at("data").is_array());
    CHECK(j.at("params").is_object());
}

} // namespace

TEST_CASE("hermite csv")
{
    const auto rows = lines(export_hermite(DeformationParam(2), 2, Format::csv));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "power,rec_num,rec_den,closed_num,closed_den,classical");
    CHECK(rows[1] == "0,-2,1,-2,1,-2");
    CHECK(rows[3] == "2,2,1,2,1,4");
    CHECK_THROWS_AS(export_hermite(DeformationParam(2), 3, Format::csv), std::out_of_range);
    CHECK_THROWS_AS(export_hermite(DeformationParam(2), 1, Format::text), std::invalid_argument);
}

TEST_CASE("hermite json")
{
    const json j = json::parse(export_hermite(DeformationParam(3), 3, Format::json));
    check_envelope(j, "hermite");
    CHECK(j["params"]["s_max"] == 3);
    CHECK(j["params"]["delta_sq"] == "1/3");
    REQUIRE(j["data"].size() == 4);
    // 8(1 - 1/3)(1 - 2/3) = 16/9
    CHECK(j["data"][3]["recurrence"]["num"] == "16");
    CHECK(j["data"][3]["recurrence"]["den"] == "9");
    CHECK(j["data"][3]["recurrence"]["num"].is_string());
}

TEST_CASE("gram csv")
{
    const auto rows = lines(export_gram(DeformationParam(1), GramChoice::exact, Format::csv));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "# scale=sqrt(s_max/pi)");
    CHECK(rows[2] == "0,0,1,2,1,1");
    CHECK(rows[5] == "1,1,1,1,1,1");

    bool match = false;
    const auto both = lines(export_gram(DeformationParam(5), GramChoice::both, Format::csv, &match));
    CHECK(match);
    CHECK(both.size() == 2 + 36);
    CHECK(fields(both[1]).back() == "match");
}

TEST_CASE("gram json carries the scale")
{
    const json j = json::parse(export_gram(DeformationParam(2), GramChoice::recurrence, Format::json));
    check_envelope(j, "gram");
    CHECK(j["scale"] == "sqrt(s_max/pi)");
    REQUIRE(j["data"].size() == 9);
    const json& g02 = j["data"][2];
    CHECK(g02["s"] == 0);
    CHECK(g02["s_prime"] == 2);
    CHECK(g02["value"].get<double>() ==
          doctest::Approx(std::sqrt(6.0) / 24 * std::sqrt(2.0 / std::numbers::pi)));
}

TEST_CASE("states csv")
{
    const auto rows = lines(export_states(DeformationParam(1), 17, Format::csv));
    REQUIRE(rows.size() == 2 + 17);
    CHECK(fields(rows[1]) == std::vector<std::string>{"phi", "f_0", "f_1"});
    const auto mid = fields(rows[2 + 8]);
    CHECK(std::stod(mid[0]) == doctest::Approx(0.0));
    CHECK(std::stod(mid[1]) == doctest::Approx(std::pow(std::numbers::pi, -0.25)));
    CHECK(std::stod(mid[2]) == doctest::Approx(0.0));
    CHECK_THROWS_AS(export_states(DeformationParam(1), 3, Format::csv), std::invalid_argument);
}

TEST_CASE("limit exports")
{
    const std::vector<int> list{4, 16};
    const json j = json::parse(export_limit(LimitQuantity::gaussian, list, Format::json));
    check_envelope(j, "limit");
    CHECK(j["params"]["quantity"] == "gaussian");
    CHECK(j["params"]["delta_sq"][1] == "1/16");
    CHECK(j["data"][0]["max_deviation"].get<double>() > j["data"][1]["max_deviation"].get<double>());

    const auto vn = lines(export_limit(LimitQuantity::vacuum_norm, list, Format::csv));
    REQUIRE(vn.size() == 4);
    CHECK(vn[1] == "s_max,ratio_num,ratio_den,pi_vacuum_norm");
    CHECK(vn[2] == "4,35,128,0.969310699713954");

    CHECK(lines(export_limit(LimitQuantity::kernel, list, Format::csv)).size() == 1 + 3 * list.size());
    CHECK_THROWS_AS(export_limit(LimitQuantity::hermite, std::vector<int>{}, Format::csv), std::invalid_argument);
}

TEST_CASE("report formats")
{
    RunReport r;
    r.suite = "toy";
    r.s_max = 2;
    r.checks.push_back({"|3> = |1>", "ref 1", CheckStatus::pass, true, ""});
    r.checks.push_back({"sign, with comma", "ref 2", CheckStatus::reported, true, "nonzero"});
    CHECK(r.passed());
    CHECK(format_line(r.checks[0]) == "ref 1: |3> = |1> exact-pass");
    CHECK(format_line(r.checks[1]) == "ref 2: sign, with comma reported -- nonzero");

    const auto csv = lines(export_report(r, Format::csv));
    CHECK(csv[0] == "reference,label,status,detail");
    CHECK(csv[2].find("\"sign, with comma\"") != std::string::npos);

    const json j = json::parse(export_report(r, Format::json));
    check_envelope(j, "verify");
    CHECK(j["passed"] == true);

    r.checks.push_back({"broken", "ref 3", CheckStatus::fail, false, ""});
    CHECK_FALSE(r.passed());
    CHECK(status_word(r.checks.back()) == "fail");
}
