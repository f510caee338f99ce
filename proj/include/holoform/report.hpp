// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "holoform/types.hpp"

namespace holoform {

enum class CheckStatus { pass, fail, skip };

const char* status_name(CheckStatus status);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::string reason;  // failure detail or the unmet prerequisite
    std::map<std::string, double> values;
    std::vector<Complex> witness;
    double wall_ms = 0.0;
};

struct Report {
    std::string scenario_name;
    std::uint64_t seed = 0;
    std::map<std::string, double> constants;
    std::vector<CheckResult> checks;
    std::vector<Table> tables;
    bool all_passed = true;

    const CheckResult* find(const std::string& name) const;
};

enum class ReportFormat { json, csv, both };

nlohmann::json report_to_json(const Report& report, bool include_timing = true);

/// Writes report.json and/or one CSV per table into out_dir.
void emit_report(const Report& report, const std::string& out_dir, ReportFormat format,
                 bool include_timing = true);

}  // namespace holoform
