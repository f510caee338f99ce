// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "holoform/demos.hpp"
#include "holoform/report.hpp"
#include "holoform/runner.hpp"
#include "holoform/scenario.hpp"

namespace {

constexpr int kExitAllPassed = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

holoform::ReportFormat parse_format(const std::string& name) {
    if (name == "json") return holoform::ReportFormat::json;
    if (name == "csv") return holoform::ReportFormat::csv;
    return holoform::ReportFormat::both;
}

void print_summary(const holoform::Report& report) {
    std::printf("scenario %s (seed %llu)\n", report.scenario_name.c_str(),
                static_cast<unsigned long long>(report.seed));
    for (const auto& check : report.checks) {
        std::printf("  %-16s %-4s", check.name.c_str(), holoform::status_name(check.status));
        if (!check.reason.empty()) std::printf("  %s", check.reason.c_str());
        std::printf("\n");
    }
    std::printf("%s\n", report.all_passed ? "all checks passed" : "not all checks passed");
}

int run_and_emit(const holoform::Scenario& scenario, const std::string& out_dir,
                 const std::string& format, double tol_scale, bool timing) {
    holoform::Report report = holoform::run_scenario(scenario, tol_scale);
    if (!out_dir.empty())
        holoform::emit_report(report, out_dir, parse_format(format), timing);
    print_summary(report);
    return report.all_passed ? kExitAllPassed : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical certification of sesquilinear-form operators, their holomorphic "
                 "families, and the associated semigroups"};
    app.require_subcommand(1);

    std::string config_path, out_dir, format = "json", emit_path, demo_name;
    double tol_scale = 1.0;
    std::uint64_t seed_override = 0;
    bool seed_given = false, no_timing = false;

    CLI::App* verify = app.add_subcommand("verify", "run the checks requested by a config file");
    verify->add_option("config", config_path, "scenario config (JSON)")->required();
    verify->add_option("--out", out_dir, "directory for report.json and CSV tables");
    verify->add_option("--format", format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    verify->add_option("--seed", seed_override, "override the scenario seed")
        ->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--tol-scale", tol_scale, "multiply every tolerance by this factor");
    verify->add_flag("--no-timing", no_timing, "omit wall-clock fields from the report");

    CLI::App* demo = app.add_subcommand("demo", "run a built-in demo scenario");
    demo->add_option("name", demo_name, "demo name (see list-demos)")->required();
    demo->add_option("--emit-config", emit_path, "write the demo's config instead of running");
    demo->add_option("--out", out_dir, "directory for report.json and CSV tables");
    demo->add_option("--format", format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    demo->add_flag("--no-timing", no_timing, "omit wall-clock fields from the report");

    app.add_subcommand("list-demos", "list the built-in demo scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list-demos")) {
            for (const std::string& name : holoform::demo_names()) std::printf("%s\n", name.c_str());
            return kExitAllPassed;
        }
        if (app.got_subcommand("verify")) {
            holoform::Scenario scenario = holoform::load_config(config_path);
            if (seed_given) scenario.seed = seed_override;
            return run_and_emit(scenario, out_dir, format, tol_scale, !no_timing);
        }
        holoform::Scenario scenario = holoform::builtin_demo(demo_name);
        if (!emit_path.empty()) {
            holoform::save_config(scenario, emit_path);
            std::printf("wrote %s\n", emit_path.c_str());
            return kExitAllPassed;
        }
        return run_and_emit(scenario, out_dir, format, 1.0, !no_timing);
    } catch (const holoform::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
