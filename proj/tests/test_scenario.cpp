// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "holoform/demos.hpp"
#include "holoform/report.hpp"
#include "holoform/runner.hpp"
#include "holoform/scenario.hpp"

using namespace holoform;
using nlohmann::json;

namespace {

json minimal_config() {
    json j;
    j["dim"] = 2;
    j["gram_V"] = json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]");
    j["gram_H"] = json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]");
    j["embedding"] = json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]");
    j["coeffs"] = json::array({json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]")});
    j["checks"] = json::array({"laxmilgram"});
    return j;
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "holoform_test";
    std::filesystem::create_directories(dir);
    return dir;
}

json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("wall_ms");
        for (auto& [key, value] : j.items()) value = strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_timing(value);
    }
    return j;
}

int run_cli(const std::string& args, const std::filesystem::path& out_file) {
    const char* cli = std::getenv("HOLOFORM_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd =
        std::string(cli) + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("a minimal config parses into a valid scenario") {
    Scenario s = scenario_from_json(minimal_config());
    CHECK(s.dim == 2);
    CHECK(s.checks.size() == 1);
    CHECK(s.checks[0] == CheckKind::laxmilgram);
    CHECK(s.domain_radius == 1.0);
    CHECK_FALSE(s.shift.has_value());
}

TEST_CASE("a non-Hermitian gram is refused with its role named") {
    json j = minimal_config();
    j["gram_H"][0][1] = json::array({0.5, 0.0});  // upper triangle only
    try {
        scenario_from_json(j);
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::validation_error);
        CHECK(std::string(e.what()).find("gram_H") != std::string::npos);
    }
}

TEST_CASE("schema errors name the offending key") {
    json j = minimal_config();
    j["checks"].push_back("not_a_check");
    CHECK_THROWS_AS((void)scenario_from_json(j), Error);

    json j2 = minimal_config();
    j2["tolerances"] = {{"no_such_key", 1.0}};
    CHECK_THROWS_AS((void)scenario_from_json(j2), Error);

    json j3 = minimal_config();
    j3["gram_V"][0][0] = 1.0;  // complex entries must be [re, im] pairs
    CHECK_THROWS_AS((void)scenario_from_json(j3), Error);

    json j4 = minimal_config();
    j4["surprise"] = 1;
    CHECK_THROWS_AS((void)scenario_from_json(j4), Error);
}

TEST_CASE("malformed JSON is a parse error, not a crash") {
    const auto path = temp_dir() / "broken.json";
    std::ofstream(path) << "{ \"dim\": 2, ";
    try {
        load_config(path.string());
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
    }
}

TEST_CASE("scenarios round-trip through their JSON form") {
    Scenario demo = builtin_demo("affine-hermitian");
    Scenario back = scenario_from_json(scenario_to_json(demo));
    CHECK(back.name == demo.name);
    CHECK(back.dim == demo.dim);
    CHECK((back.gram_v - demo.gram_v).norm() == 0.0);
    CHECK((back.gram_h - demo.gram_h).norm() == 0.0);
    CHECK((back.embedding - demo.embedding).norm() == 0.0);
    REQUIRE(back.coeffs.size() == demo.coeffs.size());
    for (std::size_t k = 0; k < back.coeffs.size(); ++k)
        CHECK((back.coeffs[k] - demo.coeffs[k]).norm() == 0.0);
    CHECK(back.checks == demo.checks);
    CHECK(back.seed == demo.seed);
    CHECK(back.semigroup.theta_prime == demo.semigroup.theta_prime);
    CHECK(back.holo.node_count == demo.holo.node_count);
}

TEST_CASE("unknown demos are refused") {
    CHECK(demo_names().size() == 5);
    CHECK_THROWS_AS((void)builtin_demo("no-such-demo"), Error);
}

TEST_CASE("an empty check list yields an empty, passing report") {
    json j = minimal_config();
    j["checks"] = json::array();
    Report report = run_scenario(scenario_from_json(j));
    CHECK(report.checks.empty());
    CHECK(report.all_passed);

    const auto dir = temp_dir() / "empty_out";
    std::filesystem::remove_all(dir);
    emit_report(report, dir.string(), ReportFormat::both);
    const json emitted = json::parse(slurp(dir / "report.json"));
    CHECK(emitted["checks"].is_array());
    CHECK(emitted["checks"].empty());
    CHECK(emitted["all_passed"] == true);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    Scenario demo = builtin_demo("jordan-nonnormal");
    const std::string once = report_to_json(run_scenario(demo), false).dump(2);
    const std::string twice = report_to_json(run_scenario(demo), false).dump(2);
    CHECK(once == twice);
}

TEST_CASE("demo reports match their golden statuses and schema") {
    const char* golden_env = std::getenv("HOLOFORM_GOLDEN_DIR");
    REQUIRE(golden_env != nullptr);
    for (const std::string& name : demo_names()) {
        CAPTURE(name);
        const json golden = json::parse(std::ifstream(std::string(golden_env) + "/" + name +
                                                      ".json"));
        Report report = run_scenario(builtin_demo(name));
        const json actual = report_to_json(report, true);

        // schema: the stable top-level keys are all present
        for (const char* key : {"scenario", "seed", "constants", "checks", "tables",
                                "all_passed"})
            CHECK(actual.contains(key));
        for (const auto& check : actual["checks"]) {
            CHECK(check.contains("name"));
            CHECK(check.contains("status"));
            CHECK(check.contains("wall_ms"));
        }

        REQUIRE(golden["checks"].size() == actual["checks"].size());
        for (std::size_t i = 0; i < golden["checks"].size(); ++i) {
            CAPTURE(i);
            CHECK(golden["checks"][i]["name"] == actual["checks"][i]["name"]);
            CHECK(golden["checks"][i]["status"] == actual["checks"][i]["status"]);
        }
        CHECK(golden["all_passed"] == actual["all_passed"]);
    }
}

TEST_CASE("skipped checks name their unmet prerequisite") {
    Report report = run_scenario(builtin_demo("pole-at-r0"));
    const CheckResult* thm4a = report.find("thm4a");
    REQUIRE(thm4a != nullptr);
    CHECK(thm4a->status == CheckStatus::skip);
    CHECK(thm4a->reason.find("resolvent_holo") != std::string::npos);
}

TEST_CASE("csv tables land one file per table with their headers") {
    Scenario demo = builtin_demo("jordan-nonnormal");
    Report report = run_scenario(demo);
    const auto dir = temp_dir() / "csv_out";
    std::filesystem::remove_all(dir);
    emit_report(report, dir.string(), ReportFormat::both);

    CHECK(std::filesystem::exists(dir / "report.json"));
    const std::string eq6 = slurp(dir / "eq6_convergence.csv");
    CHECK(eq6.rfind("n,sup_error", 0) == 0);
    // rows sorted by n
    std::istringstream lines(eq6);
    std::string line;
    std::getline(lines, line);
    double prev = 0.0;
    while (std::getline(lines, line)) {
        const double n = std::stod(line.substr(0, line.find(',')));
        CHECK(n > prev);
        prev = n;
    }
    const std::string eq5 = slurp(dir / "eq5_power_bound.csv");
    CHECK(eq5.rfind("lambda,n,norm,bound,margin", 0) == 0);
}

TEST_CASE("cli: exit codes per demo and config error handling") {
    const auto dir = temp_dir();
    CHECK(run_cli("list-demos", dir / "demos.txt") == 0);
    CHECK(slurp(dir / "demos.txt").find("affine-hermitian") != std::string::npos);

    CHECK(run_cli("demo jordan-nonnormal", dir / "jordan.txt") == 0);
    CHECK(run_cli("demo pole-at-r0", dir / "pole.txt") == 1);
    CHECK(run_cli("demo rotated-sector", dir / "rotated.txt") == 1);
    CHECK(slurp(dir / "rotated.txt").find("BoundViolated") != std::string::npos);

    std::ofstream bad(dir / "bad.json");
    json j = minimal_config();
    j["gram_H"][0][1] = json::array({0.5, 0.0});
    bad << j.dump();
    bad.close();
    CHECK(run_cli("verify " + (dir / "bad.json").string(), dir / "bad.txt") == 2);
    CHECK(slurp(dir / "bad.txt").find("gram_H") != std::string::npos);

    CHECK(run_cli("verify " + (dir / "missing.json").string(), dir / "missing.txt") == 2);
    CHECK(run_cli("demo no-such-demo", dir / "unknown.txt") == 2);
}

TEST_CASE("cli: emitted configs verify byte-identically across runs") {
    const auto dir = temp_dir();
    const auto cfg = dir / "jordan_config.json";
    CHECK(run_cli("demo jordan-nonnormal --emit-config " + cfg.string(), dir / "emit.txt") ==
          0);

    const auto out1 = dir / "run1";
    const auto out2 = dir / "run2";
    std::filesystem::remove_all(out1);
    std::filesystem::remove_all(out2);
    CHECK(run_cli("verify " + cfg.string() + " --out " + out1.string() + " --format json",
                  dir / "v1.txt") == 0);
    CHECK(run_cli("verify " + cfg.string() + " --out " + out2.string() + " --format json",
                  dir / "v2.txt") == 0);

    const json r1 = strip_timing(json::parse(slurp(out1 / "report.json")));
    const json r2 = strip_timing(json::parse(slurp(out2 / "report.json")));
    CHECK(r1.dump() == r2.dump());
}
