#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "specgenus/conjecture.hpp"
#include "specgenus/rational.hpp"

using specgenus::Rational;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = specgenus::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_SUITE("conjecture_cli") {

TEST_CASE("cli analyze cusp") {
    const auto j = run_json({"analyze", "--poly", "x^2+y^3", "--assume-nondegenerate", "--oracle"});
    CHECK(j["mu"] == "2");
    CHECK(j["spectral_genus"] == "1/6");
    CHECK(j["strong_ok"] == true);
    CHECK(j["equality_attained"] == true);
    CHECK(j["diagram"]["facets"].size() == 1);
}

TEST_CASE("cli analyze refuses without nondegeneracy flag") {
    const Result r = run({"analyze", "--poly", "x^2+y^3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("nondegenera") != std::string::npos);
}

TEST_CASE("cli analyze reads files with a vars header") {
    const auto path = std::filesystem::temp_directory_path() / "specgenus_cli_test_poly.txt";
    {
        std::ofstream f(path);
        f << "vars: a,b\n(a^2+b^3)*(b^2+a^3)\n";
    }
    const auto j = run_json({"analyze", "--poly", path.string(), "--assume-nondegenerate", "--oracle"});
    CHECK(j["germ"] == "poly(vars: a,b (a^2+b^3)*(b^2+a^3))");
    CHECK(j["mu"] == "11");
    const auto sweep = run_json({"sweep", "--poly", path.string(), "--assume-nondegenerate", "--k-max", "2"});
    CHECK(sweep["records"][0]["mu"] == "11");
    CHECK(j["spectral_genus"] == "13/10");
    CHECK(j["margin"] == "8/15");
    std::filesystem::remove(path);
}

TEST_CASE("cli analyze sums several singular points") {
    const auto j = run_json({"analyze", "--poly", "x^2+y^3", "--poly", "x^2+y^2", "--assume-nondegenerate"});
    CHECK(j["mu"] == "3");
    CHECK(j["spectral_genus"] == "1/6");
    CHECK(j["margin"] == "1/3");
}

TEST_CASE("cli homog, quasihom, family, puiseux") {
    auto j = run_json({"homog", "-n", "1", "-d", "4", "--oracle"});
    CHECK(j["mu"] == "9");
    CHECK(j["spectral_genus"] == "1");
    CHECK(j["spectrum"].size() == 5);

    j = run_json({"quasihom", "--weights", "1/2,1/3,1/7", "--oracle"});
    CHECK(j["n"] == 2);
    CHECK(j["mu"] == "12");

    j = run_json({"family", "--family", "xy", "2", "2", "--oracle"});
    CHECK(j["mu"] == "9");
    CHECK(j["spectral_genus"] == "1");

    j = run_json({"puiseux", "--puiseux", "3:2,7:2", "--oracle"});
    CHECK(j["mu"] == "22");
    CHECK(j["identity_verified"] == true);
    CHECK(j["s1_plus_over_12"] == "1/6");
}

TEST_CASE("cli suspend") {
    const auto j = run_json({"suspend", "--weights", "1/2,1/3", "--k", "6"});
    CHECK(j["p_g_h"] == 1);
    CHECK(j["identity_verified"] == true);
    const Result bad = run({"suspend", "--weights", "1/2,1/3", "--k", "4"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("T_s^k") != std::string::npos);
}

TEST_CASE("cli sweeps") {
    auto j = run_json({"sweep", "--poly", "x^2+y^3", "--assume-nondegenerate", "--k-values", "1", "2", "3"});
    CHECK(j["records"].size() == 3);
    CHECK(j["predicted_limit"] == "5/12");
    j = run_json({"sweep", "--homog-n", "1", "--d-min", "2", "--d-max", "10"});
    CHECK(j["records"].size() == 9);
    CHECK(j["ratio_nondecreasing_below_limit"] == true);

    const Result csv = run({"sweep", "--homog-n", "2", "--d-min", "3", "--d-max", "5", "--format", "csv"});
    REQUIRE(csv.code == 0);
    std::istringstream in(csv.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == specgenus::kReportCsvHeader);
}

TEST_CASE("cli distribution") {
    auto j = run_json({"distribution", "--homog", "1", "12"});
    CHECK(j["hertling_gap"] == "0");
    CHECK(j["hertling_strong_criterion"] == false);
    j = run_json({"distribution", "--homog-family", "1", "--d-min", "2", "--d-max", "40", "--grid", "100"});
    CHECK(j["members"].size() == 39);
    CHECK(j["min_alpha_decreasing"] == true);
    const Result csv = run({"distribution", "--homog-family", "1", "--d-min", "5", "--d-max", "6", "--format", "csv"});
    CHECK(csv.out.rfind("parameter,mu,min_alpha,ratio_pg,ratio_sg,cdf_distance", 0) == 0);
}

TEST_CASE("cli table output and usage errors") {
    const Result t = run({"family", "--family", "plain", "3", "4"});
    CHECK(t.code == 0);
    CHECK(t.out.find("strong form:       holds") != std::string::npos);
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"homog", "-n", "1"}).code == 1);
    CHECK(run({"puiseux", "--puiseux", "3:2,5:2"}).code == 1);
    CHECK(run({"analyze", "--poly", "x^2+", "--assume-nondegenerate"}).code == 1);
    CHECK(run({"homog", "-n", "1", "-d", "3", "--format", "xml"}).code == 1);
    const Result h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("analyze") != std::string::npos);
}

}
