// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holoform/errors.hpp"
#include "holoform/types.hpp"

namespace holoform {

enum class CheckKind {
    laxmilgram,
    sector,
    uniform_sector,
    norm_equiv,
    resolvent_holo,
    eq5,
    eq6,
    thm4a,
    thm4b,
    remark_a,
};

/// Canonical check order (also the dependency and report order).
const std::vector<CheckKind>& all_checks();
const char* check_name(CheckKind kind);
CheckKind check_from_name(const std::string& name);  // SchemaError on unknown names

struct SemigroupConfig {
    double t1 = 1.0;
    int t_grid_points = 21;
    std::vector<double> t_grid;  // explicit grid; empty means uniform
    std::vector<int> n_list = {64, 128, 256};
    std::vector<double> lambdas = {0.25, 0.5, 1.0, 2.0, 4.0};
    int n_max = 20;
    double theta_prime = 0.78539816339744830961;  // pi/4
    double growth_m = 1.0;
    double omega = 0.0;
    Vector x;  // probe vector; empty means a seeded unit draw
    double tau_radius = 1.0;
    int tau_points = 5;  // per axis of the truncated-sector grid
};

struct HoloConfig {
    std::optional<double> radius;  // default: half the certified radius
    int node_count = 32;
    Complex lambda = Complex(0.0, 0.0);
};

struct Scenario {
    std::string name = "scenario";
    Index dim = 0;
    Matrix gram_v;
    Matrix gram_h;
    Matrix embedding;
    std::vector<Matrix> coeffs;
    double domain_radius = 1.0;
    std::optional<double> shift;  // absent: shift automatically to vertex 1
    std::vector<CheckKind> checks;
    std::map<std::string, double> tolerance_overrides;
    std::uint64_t seed = 0;
    SemigroupConfig semigroup;
    HoloConfig holo;

    Tolerances tolerances(double scale = 1.0) const;
};

/// Parses and validates a scenario file. ParseError carries the byte
/// position; SchemaError and ValidationError name the offending key.
Scenario load_config(const std::string& path);
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
void save_config(const Scenario& s, const std::string& path);

}  // namespace holoform
