// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/report.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "holoform/errors.hpp"

namespace holoform {

using nlohmann::json;

const char* status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "unknown";
}

const CheckResult* Report::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

json report_to_json(const Report& report, bool include_timing) {
    json j;
    j["scenario"] = report.scenario_name;
    j["seed"] = report.seed;
    j["constants"] = report.constants;
    j["all_passed"] = report.all_passed;

    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = status_name(c.status);
        if (!c.reason.empty()) jc["reason"] = c.reason;
        if (!c.values.empty()) jc["values"] = c.values;
        if (!c.witness.empty()) {
            json w = json::array();
            for (Complex z : c.witness) w.push_back(json::array({z.real(), z.imag()}));
            jc["witness"] = w;
        }
        if (include_timing) jc["wall_ms"] = c.wall_ms;
        checks.push_back(jc);
    }
    j["checks"] = checks;

    json tables;
    for (const Table& t : report.tables) {
        json jt;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        tables[t.name] = jt;
    }
    j["tables"] = tables;
    return j;
}

void emit_report(const Report& report, const std::string& out_dir, ReportFormat format,
                 bool include_timing) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    require(!ec, Errc::io_error, "cannot create output directory '" + out_dir + "'");

    if (format == ReportFormat::json || format == ReportFormat::both) {
        const auto path = std::filesystem::path(out_dir) / "report.json";
        std::ofstream out(path);
        require(out.good(), Errc::io_error, "cannot write '" + path.string() + "'");
        out << report_to_json(report, include_timing).dump(2) << "\n";
        require(out.good(), Errc::io_error, "write failed for '" + path.string() + "'");
    }
    if (format == ReportFormat::csv || format == ReportFormat::both) {
        for (const Table& t : report.tables) {
            const auto path = std::filesystem::path(out_dir) / (t.name + ".csv");
            std::ofstream out(path);
            require(out.good(), Errc::io_error, "cannot write '" + path.string() + "'");
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                out << (i ? "," : "") << t.columns[i];
            out << "\n";
            out.precision(17);
            for (const auto& row : t.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
                out << "\n";
            }
            require(out.good(), Errc::io_error, "write failed for '" + path.string() + "'");
        }
    }
}

}  // namespace holoform
