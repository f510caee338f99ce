// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds at its stated tolerance. argv[1] must point at the CLI
// binary (used by the determinism criterion).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "holoform/demos.hpp"
#include "holoform/report.hpp"
#include "holoform/runner.hpp"
#include "holoform/semigroup.hpp"

using namespace holoform;
using nlohmann::json;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> run;
};

struct InstanceData {
    test::Instance inst;
    bool hermitian;
};

std::vector<InstanceData> make_instances() {
    std::vector<InstanceData> out;
    for (int k = 0; k < 50; ++k) {
        const Index dim = 2 + Index(k % 7);
        const bool hermitian = k % 2 == 0;
        out.push_back({test::random_instance(9000 + std::uint64_t(k), dim, hermitian),
                       hermitian});
    }
    return out;
}

/// The instance form shifted so its vertex against the embedded H metric is 1.
Form normalized_form(const test::Instance& inst) {
    FormFamily family(inst.embedding, {inst.form.mat()}, 1.0);
    const double vertex = form_vertex(inst.form, inst.embedding);
    return family.shifted(1.0 - vertex).at(0.0);
}

bool value_of(const Report& report, const std::string& check, const std::string& key,
              double& out) {
    const CheckResult* c = report.find(check);
    if (c == nullptr) return false;
    auto it = c->values.find(key);
    if (it == c->values.end()) return false;
    out = it->second;
    return true;
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

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 2;
    }
    const std::string cli = argv[1];

    std::printf("building the 50 seeded instances and the demo reports...\n");
    const auto instances = make_instances();
    const Report affine = run_scenario(builtin_demo("affine-hermitian"));
    const Report schrodinger = run_scenario(builtin_demo("schrodinger-1d"));
    const Report pole = run_scenario(builtin_demo("pole-at-r0"));
    const Report rotated = run_scenario(builtin_demo("rotated-sector"));
    const std::vector<const Report*> positive_demos = {&affine, &schrodinger};

    std::vector<Criterion> criteria;

    criteria.push_back({1, "inverse composition matches the column-built oracle to 1e-9",
                        [&](std::string& note) {
        double worst = 0.0;
        for (const auto& [inst, hermitian] : instances) {
            auto assoc = AssociatedOperator::build(inst.form, inst.embedding);
            const Matrix oracle = test::columnwise_inverse_oracle(inst.form, inst.embedding);
            worst = std::max(worst, (assoc.inv() - oracle).norm() / oracle.norm());
        }
        note = "worst relative gap " + std::to_string(worst);
        return worst <= 1e-9;
    }});

    criteria.push_back({2, "inverse norm <= 1/alpha + 1e-10, tight to 1e-8 when Hermitian",
                        [&](std::string& note) {
        double worst_excess = -1e300, worst_tight = 0.0;
        for (const auto& [inst, hermitian] : instances) {
            const double alpha = coercivity_constant(inst.form).alpha;
            const double norm = laxmilgram_inverse_norm(inst.form);
            worst_excess = std::max(worst_excess, norm - 1.0 / alpha);
            if (hermitian)
                worst_tight = std::max(worst_tight, std::abs(norm * alpha - 1.0));
        }
        std::ostringstream msg;
        msg << "worst excess " << worst_excess << ", worst Hermitian tightness "
            << worst_tight;
        note = msg.str();
        return worst_excess <= 1e-10 && worst_tight <= 1e-8;
    }});

    criteria.push_back({3, "accretivity margin >= alpha / c^2 - 1e-10 on every instance",
                        [&](std::string& note) {
        double worst = 1e300;
        for (const auto& [inst, hermitian] : instances) {
            auto assoc = AssociatedOperator::build(inst.form, inst.embedding);
            const double margin = accretivity_margin(assoc);
            const double alpha = coercivity_constant(inst.form).alpha;
            const double c = inst.embedding.bound_c();
            worst = std::min(worst, margin - alpha / (c * c));
        }
        note = "worst margin over the bound " + std::to_string(worst);
        return worst >= -1e-10;
    }});

    criteria.push_back({4, "perturbation chain holds on 25 boundary samples of both demos",
                        [&](std::string& note) {
        double worst = 1e300;
        for (const char* name : {"affine-hermitian", "schrodinger-1d"}) {
            Scenario sc = builtin_demo(name);
            auto v = HilbertSpace::make(sc.gram_v);
            auto h = HilbertSpace::make(sc.gram_h);
            Embedding embed(v, h, sc.embedding);
            FormFamily raw(embed, sc.coeffs, sc.domain_radius);
            FormFamily family =
                raw.shifted(1.0 - form_vertex(raw.at(0.0), embed));
            const auto cert = perturbation_radius(family);
            const double half_gap = 1.0 / (2.0 * cert.c_big);
            const Form a0 = family.at(0.0);
            Rng rng(31337);
            for (std::size_t j = 0; j < cert.boundary_samples.size(); ++j) {
                worst = std::min(worst, half_gap + 1e-10 - cert.sample_gaps[j]);
                worst = std::min(worst, 2.0 * cert.c0 + 1.0 + 1e-8 - cert.sample_slopes[j]);
                const Form az = family.at(cert.boundary_samples[j]);
                for (int trial = 0; trial < 100; ++trial) {
                    Vector u = rng.gaussian_vector(family.dim());
                    u /= std::sqrt((u.adjoint() * v->gram() * u)(0).real());
                    const Complex q0 = a0.quad(u);
                    const Complex qz = az.quad(u);
                    const double gap = std::abs(qz - q0);
                    worst = std::min({worst, half_gap + 1e-10 - gap,
                                      0.5 * q0.real() + 1e-10 - gap,
                                      qz.real() - 0.5 * q0.real() + 1e-10,
                                      0.5 * q0.real() - half_gap + 1e-10});
                }
            }
        }
        note = "worst inequality margin " + std::to_string(worst);
        return worst >= 0.0;
    }});

    criteria.push_back({5, "squared form-norm ratios stay inside [1/2, 3/2] on the boundary",
                        [&](std::string& note) {
        bool ok = true;
        double lo = 1e300, hi = -1e300;
        for (const Report* rep : positive_demos) {
            const CheckResult* c = rep->find("norm_equiv");
            ok = ok && c != nullptr && c->status == CheckStatus::pass;
            double rmin = 0.0, rmax = 0.0;
            ok = ok && value_of(*rep, "norm_equiv", "ratio_min", rmin) &&
                 value_of(*rep, "norm_equiv", "ratio_max", rmax);
            lo = std::min(lo, rmin);
            hi = std::max(hi, rmax);
            ok = ok && rmin >= 0.5 - 1e-10 && rmax <= 1.5 + 1e-10;
        }
        std::ostringstream msg;
        msg << "ratios within [" << lo << ", " << hi << "]";
        note = msg.str();
        return ok;
    }});

    criteria.push_back({6, "mean-value residual of the inverse family <= 1e-8; pole demo fails",
                        [&](std::string& note) {
        bool ok = true;
        double worst = 0.0;
        for (const Report* rep : positive_demos) {
            const CheckResult* c = rep->find("resolvent_holo");
            ok = ok && c != nullptr && c->status == CheckStatus::pass;
            double residual = 1e300, nodes = 0.0;
            ok = ok && value_of(*rep, "resolvent_holo", "residual", residual) &&
                 value_of(*rep, "resolvent_holo", "node_count", nodes);
            ok = ok && nodes == 32.0 && residual <= 1e-8;
            worst = std::max(worst, residual);
        }
        const CheckResult* neg = pole.find("resolvent_holo");
        ok = ok && neg != nullptr && neg->status == CheckStatus::fail;
        std::ostringstream msg;
        msg << "worst positive residual " << worst << "; pole demo "
            << (neg != nullptr ? status_name(neg->status) : "missing");
        note = msg.str();
        return ok;
    }});

    criteria.push_back({7, "resolvent power bounds with M = 1 on all normalized instances",
                        [&](std::string& note) {
        const double lambdas[] = {0.25, 0.5, 1.0, 2.0, 4.0};
        double worst = 1e300;
        for (const auto& [inst, hermitian] : instances) {
            const Form shifted = normalized_form(inst);
            auto assoc = AssociatedOperator::build(shifted, inst.embedding);
            const auto rep = resolvent_power_bound_check(assoc.op(), inst.embedding.codomain(),
                                                         1.0, 0.0, lambdas, 20);
            worst = std::min(worst, rep.worst_margin);
        }
        note = "worst margin " + std::to_string(worst);
        return worst >= -1e-10;
    }});

    criteria.push_back({8, "iterate errors halve per doubling for n in {64, 128, 256}",
                        [&](std::string& note) {
        const int n_list[] = {64, 128, 256};
        double lo_ratio = 1e300, hi_ratio = -1e300;
        for (int k = 0; k < 10; ++k) {
            const auto& inst = instances[static_cast<std::size_t>(k)].inst;
            const Form shifted = normalized_form(inst);
            auto assoc = AssociatedOperator::build(shifted, inst.embedding);
            const auto table = exponential_formula_convergence(
                assoc.op(), inst.embedding.codomain(), 1.0, n_list);
            for (std::size_t i = 0; i + 1 < table.n.size(); ++i) {
                const double ratio = table.sup_error[i] / table.sup_error[i + 1];
                lo_ratio = std::min(lo_ratio, ratio);
                hi_ratio = std::max(hi_ratio, ratio);
            }
        }
        std::ostringstream msg;
        msg << "ratios within [" << lo_ratio << ", " << hi_ratio << "]";
        note = msg.str();
        return lo_ratio >= 1.5 && hi_ratio <= 2.5;
    }});

    criteria.push_back({9, "semigroup holomorphy residuals <= 1e-7 and decay with node count",
                        [&](std::string& note) {
        bool ok = true;
        double worst = 0.0;
        for (const Report* rep : positive_demos) {
            for (const char* check : {"thm4a", "thm4b"}) {
                const CheckResult* c = rep->find(check);
                ok = ok && c != nullptr && c->status == CheckStatus::pass;
                double residual = 1e300, half = 0.0;
                ok = ok && value_of(*rep, check, "residual", residual) &&
                     value_of(*rep, check, "residual_half_nodes", half);
                ok = ok && residual <= 1e-7 && residual <= std::max(half, 1e-12);
                worst = std::max(worst, residual);
            }
        }
        note = "worst residual " + std::to_string(worst);
        return ok;
    }});

    criteria.push_back({10, "sector sweep bounded and holomorphic; rotated demo violates",
                        [&](std::string& note) {
        const CheckResult* pos = affine.find("remark_a");
        bool ok = pos != nullptr && pos->status == CheckStatus::pass;
        double residual = 1e300, margin = -1e300, theta = 0.0;
        ok = ok && value_of(affine, "remark_a", "residual", residual) &&
             value_of(affine, "remark_a", "worst_growth_margin", margin) &&
             value_of(affine, "remark_a", "theta_prime", theta);
        ok = ok && residual <= 1e-7 && margin >= -1e-10 &&
             std::abs(theta - 0.78539816339744830961) < 1e-15;

        const CheckResult* neg = rotated.find("remark_a");
        ok = ok && neg != nullptr && neg->status == CheckStatus::fail &&
             neg->reason.find("BoundViolated") != std::string::npos;
        std::ostringstream msg;
        msg << "residual " << residual << ", growth margin " << margin << "; rotated demo "
            << (neg != nullptr ? status_name(neg->status) : "missing");
        note = msg.str();
        return ok;
    }});

    criteria.push_back({11, "verify emits byte-identical reports for a fixed config and seed",
                        [&](std::string& note) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "holoform_acceptance";
        fs::create_directories(dir);
        const fs::path cfg = dir / "config.json";
        save_config(builtin_demo("affine-hermitian"), cfg.string());

        auto run = [&](const std::string& out) {
            const std::string cmd = cli + " verify " + cfg.string() + " --out " +
                                    (dir / out).string() + " --format json > " +
                                    (dir / (out + ".log")).string() + " 2>&1";
            return std::system(cmd.c_str());
        };
        if (run("a") == -1 || run("b") == -1) {
            note = "could not launch the CLI";
            return false;
        }
        const std::string raw_a = slurp(dir / "a" / "report.json");
        const std::string raw_b = slurp(dir / "b" / "report.json");
        if (raw_a.empty() || raw_b.empty()) {
            note = "missing report output";
            return false;
        }
        const std::string stripped_a = strip_timing(json::parse(raw_a)).dump(2);
        const std::string stripped_b = strip_timing(json::parse(raw_b)).dump(2);
        note = "reports of " + std::to_string(stripped_a.size()) + " bytes compared";
        return stripped_a == stripped_b && !stripped_a.empty();
    }});

    int failures = 0;
    for (const auto& criterion : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = criterion.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        std::printf("[%2d] %s  %s (%s)\n", criterion.id, ok ? "PASS" : "FAIL",
                    criterion.label.c_str(), note.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
