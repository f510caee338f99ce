// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <set>

#include "holoform/hilbert.hpp"

namespace holoform {

using nlohmann::json;

const std::vector<CheckKind>& all_checks() {
    static const std::vector<CheckKind> order = {
        CheckKind::laxmilgram, CheckKind::sector,  CheckKind::uniform_sector,
        CheckKind::norm_equiv, CheckKind::resolvent_holo, CheckKind::eq5,
        CheckKind::eq6,        CheckKind::thm4a,   CheckKind::thm4b,
        CheckKind::remark_a,
    };
    return order;
}

const char* check_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::laxmilgram: return "laxmilgram";
        case CheckKind::sector: return "sector";
        case CheckKind::uniform_sector: return "uniform_sector";
        case CheckKind::norm_equiv: return "norm_equiv";
        case CheckKind::resolvent_holo: return "resolvent_holo";
        case CheckKind::eq5: return "eq5";
        case CheckKind::eq6: return "eq6";
        case CheckKind::thm4a: return "thm4a";
        case CheckKind::thm4b: return "thm4b";
        case CheckKind::remark_a: return "remark_a";
    }
    return "unknown";
}

CheckKind check_from_name(const std::string& name) {
    for (CheckKind kind : all_checks())
        if (name == check_name(kind)) return kind;
    fail(Errc::schema_error, "unknown check name '" + name + "'");
}

Tolerances Scenario::tolerances(double scale) const {
    Tolerances tol;
    for (const auto& [key, value] : tolerance_overrides) tol.set(key, value);
    if (scale != 1.0) tol.scale(scale);
    return tol;
}

namespace {

Complex parse_complex(const json& j, const std::string& where) {
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
            Errc::schema_error, where + ": complex values are 2-element arrays [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Vector parse_vector(const json& j, Index dim, const std::string& where) {
    require(j.is_array(), Errc::schema_error, where + ": expected an array");
    require(dim < 0 || static_cast<Index>(j.size()) == dim, Errc::schema_error,
            where + ": expected " + std::to_string(dim) + " entries");
    Vector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Index>(i)) = parse_complex(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

Matrix parse_matrix(const json& j, Index dim, const std::string& where) {
    require(j.is_array() && static_cast<Index>(j.size()) == dim, Errc::schema_error,
            where + ": expected " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        require(row.is_array() && static_cast<Index>(row.size()) == dim, Errc::schema_error,
                where + ": row " + std::to_string(r) + " must have " + std::to_string(dim) +
                    " entries");
        for (Index c = 0; c < dim; ++c)
            m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                    where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                        "]");
    }
    return m;
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json dump_vector(const Vector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(dump_complex(v(i)));
    return out;
}

json dump_matrix(const Matrix& m) {
    json out = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(dump_complex(m(r, c)));
        out.push_back(row);
    }
    return out;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        require(allowed.count(key) == 1, Errc::schema_error,
                where + ": unknown key '" + key + "'");
}

/// Validates the matrices in the roles the scenario assigns them; errors
/// name the offending key.
void validate_scenario(const Scenario& s) {
    auto validate_gram = [](const Matrix& gram, const std::string& role) {
        try {
            HilbertSpace::make(gram);
        } catch (const Error& e) {
            throw Error(Errc::validation_error, role + ": " + e.what());
        }
    };
    validate_gram(s.gram_v, "gram_V");
    validate_gram(s.gram_h, "gram_H");
    try {
        Embedding(HilbertSpace::make(s.gram_v), HilbertSpace::make(s.gram_h), s.embedding);
    } catch (const Error& e) {
        throw Error(Errc::validation_error, std::string("embedding: ") + e.what());
    }
    require(!s.coeffs.empty(), Errc::validation_error, "coeffs: need at least one matrix");
    require(s.domain_radius > 0.0, Errc::validation_error,
            "domain_radius: must be positive");
    require(s.semigroup.t1 > 0.0, Errc::validation_error, "semigroup.t1: must be positive");
    require(s.semigroup.tau_radius > 0.0, Errc::validation_error,
            "semigroup.tau_radius: must be positive");
    require(s.holo.node_count >= 8, Errc::validation_error,
            "holo.node_count: must be at least 8");
}

}  // namespace

Scenario scenario_from_json(const json& j) {
    require(j.is_object(), Errc::schema_error, "top level must be an object");
    check_keys(j,
               {"name", "dim", "gram_V", "gram_H", "embedding", "coeffs", "domain_radius",
                "shift", "checks", "tolerances", "seed", "semigroup", "holo"},
               "top level");

    Scenario s;
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    require(j.contains("dim") && j.at("dim").is_number_integer(), Errc::schema_error,
            "dim: required integer");
    s.dim = j.at("dim").get<Index>();
    require(s.dim >= 1, Errc::schema_error, "dim: must be at least 1");

    for (const char* key : {"gram_V", "gram_H", "embedding", "coeffs", "checks"})
        require(j.contains(key), Errc::schema_error, std::string(key) + ": required");

    s.gram_v = parse_matrix(j.at("gram_V"), s.dim, "gram_V");
    s.gram_h = parse_matrix(j.at("gram_H"), s.dim, "gram_H");
    s.embedding = parse_matrix(j.at("embedding"), s.dim, "embedding");

    const json& coeffs = j.at("coeffs");
    require(coeffs.is_array() && !coeffs.empty(), Errc::schema_error,
            "coeffs: nonempty array of matrices (index = power of z)");
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s.coeffs.push_back(parse_matrix(coeffs[k], s.dim, "coeffs[" + std::to_string(k) + "]"));

    if (j.contains("domain_radius")) s.domain_radius = j.at("domain_radius").get<double>();
    if (j.contains("shift") && !j.at("shift").is_null())
        s.shift = j.at("shift").get<double>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();

    const json& checks = j.at("checks");
    require(checks.is_array(), Errc::schema_error, "checks: expected an array of names");
    for (const json& c : checks) {
        require(c.is_string(), Errc::schema_error, "checks: entries must be strings");
        s.checks.push_back(check_from_name(c.get<std::string>()));
    }

    if (j.contains("tolerances")) {
        const json& tols = j.at("tolerances");
        require(tols.is_object(), Errc::schema_error, "tolerances: expected an object");
        Tolerances probe;
        for (const auto& [key, value] : tols.items()) {
            require(value.is_number(), Errc::schema_error,
                    "tolerances." + key + ": expected a number");
            probe.set(key, value.get<double>());  // SchemaError on unknown keys
            s.tolerance_overrides[key] = value.get<double>();
        }
    }

    if (j.contains("semigroup")) {
        const json& sg = j.at("semigroup");
        require(sg.is_object(), Errc::schema_error, "semigroup: expected an object");
        check_keys(sg,
                   {"t1", "t_grid", "n_list", "lambdas", "n_max", "theta_prime", "M", "omega",
                    "x", "tau_radius", "tau_points"},
                   "semigroup");
        if (sg.contains("t1")) s.semigroup.t1 = sg.at("t1").get<double>();
        if (sg.contains("t_grid")) {
            const json& grid = sg.at("t_grid");
            if (grid.is_number_integer()) {
                s.semigroup.t_grid_points = grid.get<int>();
                require(s.semigroup.t_grid_points >= 2, Errc::schema_error,
                        "semigroup.t_grid: needs at least 2 points");
            } else {
                require(grid.is_array(), Errc::schema_error,
                        "semigroup.t_grid: integer count or array of times");
                for (const json& t : grid) s.semigroup.t_grid.push_back(t.get<double>());
            }
        }
        if (sg.contains("n_list")) {
            s.semigroup.n_list.clear();
            for (const json& n : sg.at("n_list")) s.semigroup.n_list.push_back(n.get<int>());
        }
        if (sg.contains("lambdas")) {
            s.semigroup.lambdas.clear();
            for (const json& l : sg.at("lambdas"))
                s.semigroup.lambdas.push_back(l.get<double>());
        }
        if (sg.contains("n_max")) s.semigroup.n_max = sg.at("n_max").get<int>();
        if (sg.contains("theta_prime"))
            s.semigroup.theta_prime = sg.at("theta_prime").get<double>();
        if (sg.contains("M")) s.semigroup.growth_m = sg.at("M").get<double>();
        if (sg.contains("omega")) s.semigroup.omega = sg.at("omega").get<double>();
        if (sg.contains("x")) s.semigroup.x = parse_vector(sg.at("x"), s.dim, "semigroup.x");
        if (sg.contains("tau_radius"))
            s.semigroup.tau_radius = sg.at("tau_radius").get<double>();
        if (sg.contains("tau_points")) s.semigroup.tau_points = sg.at("tau_points").get<int>();
    }

    if (j.contains("holo")) {
        const json& ho = j.at("holo");
        require(ho.is_object(), Errc::schema_error, "holo: expected an object");
        check_keys(ho, {"radius", "node_count", "lambda"}, "holo");
        if (ho.contains("radius") && !ho.at("radius").is_null())
            s.holo.radius = ho.at("radius").get<double>();
        if (ho.contains("node_count")) s.holo.node_count = ho.at("node_count").get<int>();
        if (ho.contains("lambda")) s.holo.lambda = parse_complex(ho.at("lambda"), "holo.lambda");
    }

    validate_scenario(s);
    return s;
}

Scenario load_config(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse_error, e.what());
    }
    return scenario_from_json(j);
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["dim"] = s.dim;
    j["gram_V"] = dump_matrix(s.gram_v);
    j["gram_H"] = dump_matrix(s.gram_h);
    j["embedding"] = dump_matrix(s.embedding);
    json coeffs = json::array();
    for (const Matrix& m : s.coeffs) coeffs.push_back(dump_matrix(m));
    j["coeffs"] = coeffs;
    j["domain_radius"] = s.domain_radius;
    if (s.shift) j["shift"] = *s.shift;
    json checks = json::array();
    for (CheckKind kind : s.checks) checks.push_back(check_name(kind));
    j["checks"] = checks;
    if (!s.tolerance_overrides.empty()) j["tolerances"] = s.tolerance_overrides;
    j["seed"] = s.seed;

    json sg;
    sg["t1"] = s.semigroup.t1;
    if (!s.semigroup.t_grid.empty())
        sg["t_grid"] = s.semigroup.t_grid;
    else
        sg["t_grid"] = s.semigroup.t_grid_points;
    sg["n_list"] = s.semigroup.n_list;
    sg["lambdas"] = s.semigroup.lambdas;
    sg["n_max"] = s.semigroup.n_max;
    sg["theta_prime"] = s.semigroup.theta_prime;
    sg["M"] = s.semigroup.growth_m;
    sg["omega"] = s.semigroup.omega;
    if (s.semigroup.x.size() > 0) sg["x"] = dump_vector(s.semigroup.x);
    sg["tau_radius"] = s.semigroup.tau_radius;
    sg["tau_points"] = s.semigroup.tau_points;
    j["semigroup"] = sg;

    json ho;
    if (s.holo.radius) ho["radius"] = *s.holo.radius;
    ho["node_count"] = s.holo.node_count;
    ho["lambda"] = dump_complex(s.holo.lambda);
    j["holo"] = ho;
    return j;
}

void save_config(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), Errc::io_error, "cannot write config file '" + path + "'");
    out << scenario_to_json(s).dump(2) << "\n";
    require(out.good(), Errc::io_error, "write failed for '" + path + "'");
}

}  // namespace holoform
