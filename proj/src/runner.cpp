// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/runner.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "holoform/demos.hpp"
#include "holoform/laxmilgram.hpp"
#include "holoform/rng.hpp"
#include "holoform/semigroup.hpp"

namespace holoform {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Complex> witness_from(const Vector& v) {
    std::vector<Complex> out(static_cast<std::size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
    return out;
}

class ScenarioRun {
  public:
    ScenarioRun(const Scenario& sc, double tol_scale)
        : sc_(sc),
          tol_(sc.tolerances(tol_scale)),
          space_v_(HilbertSpace::make(sc.gram_v, tol_)),
          space_h_(HilbertSpace::make(sc.gram_h, tol_)),
          embed_(space_v_, space_h_, sc.embedding, tol_),
          raw_family_(embed_, sc.coeffs, sc.domain_radius),
          family_(raw_family_) {
        report_.scenario_name = sc.name;
        report_.seed = sc.seed;

        vertex_raw_ = form_vertex(raw_family_.at(0.0), embed_);
        shift_ = sc.shift.value_or(1.0 - vertex_raw_);
        family_ = raw_family_.shifted(shift_);
        report_.constants["vertex_raw"] = vertex_raw_;
        report_.constants["shift"] = shift_;
        report_.constants["vertex"] = form_vertex(family_.at(0.0), embed_);
        report_.constants["M"] = sc.semigroup.growth_m;
        report_.constants["omega"] = sc.semigroup.omega;

        if (sc.semigroup.x.size() > 0) {
            probe_ = sc.semigroup.x;
        } else {
            Rng rng(sc.seed ^ 0x70726f6265ull);
            probe_ = rng.gaussian_vector(family_.dim());
        }
        const double pnorm = space_h_->norm(probe_);
        if (pnorm > 0.0) probe_ /= pnorm;
    }

    Report run() {
        for (CheckKind kind : all_checks()) {
            bool requested = false;
            for (CheckKind want : sc_.checks) requested = requested || want == kind;
            if (!requested) continue;
            CheckResult result;
            result.name = check_name(kind);
            const auto start = Clock::now();
            try {
                dispatch(kind, result);
            } catch (const Error& e) {
                result.status = CheckStatus::fail;
                result.reason = e.what();
            }
            result.wall_ms = ms_since(start);
            statuses_[kind] = result.status;
            report_.checks.push_back(std::move(result));
        }
        report_.all_passed = true;
        for (const CheckResult& c : report_.checks)
            report_.all_passed = report_.all_passed && c.status == CheckStatus::pass;
        return std::move(report_);
    }

  private:
    void dispatch(CheckKind kind, CheckResult& out) {
        switch (kind) {
            case CheckKind::laxmilgram: return check_laxmilgram(out);
            case CheckKind::sector: return check_sector(out);
            case CheckKind::uniform_sector: return check_uniform_sector(out);
            case CheckKind::norm_equiv: return check_norm_equiv(out);
            case CheckKind::resolvent_holo: return check_resolvent_holo(out);
            case CheckKind::eq5: return check_eq5(out);
            case CheckKind::eq6: return check_eq6(out);
            case CheckKind::thm4a: return check_thm4(out, false);
            case CheckKind::thm4b: return check_thm4(out, true);
            case CheckKind::remark_a: return check_remark_a(out);
        }
    }

    // --- prerequisite plumbing -------------------------------------------

    /// True (and fills `out` as a skip) when `prereq` was requested and did
    /// not pass; dependent checks never run on a failed prerequisite.
    bool skip_on_failed(CheckKind prereq, CheckResult& out) {
        auto it = statuses_.find(prereq);
        if (it == statuses_.end() || it->second == CheckStatus::pass) return false;
        out.status = CheckStatus::skip;
        out.reason = std::string("prerequisite ") + check_name(prereq) + " failed";
        return true;
    }

    const AssociatedOperator& ensure_assoc() {
        if (!assoc_) assoc_ = AssociatedOperator::build(family_.at(0.0), embed_, tol_);
        return *assoc_;
    }

    const UniformSectorCertificate& ensure_cert() {
        if (cert_error_) std::rethrow_exception(cert_error_);
        if (!cert_) {
            try {
                cert_ = perturbation_radius(family_, tol_);
            } catch (...) {
                cert_error_ = std::current_exception();
                throw;
            }
        }
        return *cert_;
    }

    double holo_radius() {
        if (sc_.holo.radius) return *sc_.holo.radius;
        return ensure_cert().radius / 2.0;
    }

    const UniformSectorCertificate* cert_if_available() {
        try {
            return &ensure_cert();
        } catch (const Error&) {
            return nullptr;
        }
    }

    const HolomorphyReport& ensure_resolvent_holo() {
        if (!rhol_) {
            rhol_ = resolvent_holomorphy_check(family_, Complex(0.0, 0.0), sc_.holo.lambda,
                                               holo_radius(), sc_.holo.node_count, tol_,
                                               cert_if_available());
        }
        return *rhol_;
    }

    const SemigroupHolomorphyResult& ensure_semigroup_holo() {
        if (!sg_holo_) {
            sg_holo_ = semigroup_holomorphy_check(
                family_, Complex(0.0, 0.0), holo_radius(), sc_.semigroup.t1, probe_,
                sc_.holo.node_count, sc_.semigroup.growth_m, sc_.semigroup.omega,
                thm4_grid(), tol_);
        }
        return *sg_holo_;
    }

    std::vector<double> thm4_grid() const {
        if (!sc_.semigroup.t_grid.empty()) return sc_.semigroup.t_grid;
        std::vector<double> grid(static_cast<std::size_t>(sc_.semigroup.t_grid_points));
        for (int k = 0; k < sc_.semigroup.t_grid_points; ++k)
            grid[static_cast<std::size_t>(k)] =
                sc_.semigroup.t1 * k / (sc_.semigroup.t_grid_points - 1);
        return grid;
    }

    // --- the checks -------------------------------------------------------

    void check_laxmilgram(CheckResult& out) {
        const Form a0 = family_.at(0.0);
        const auto cert = coercivity_constant(a0);
        const auto& assoc = ensure_assoc();
        const double inv_norm = laxmilgram_inverse_norm(a0);
        const double margin = accretivity_margin(assoc);
        const double c = embed_.bound_c();
        const double inv_bound = 1.0 / cert.alpha;
        const double margin_bound = cert.alpha / (c * c);

        report_.constants["alpha"] = cert.alpha;
        report_.constants["c"] = c;
        out.values["alpha"] = cert.alpha;
        out.values["c"] = c;
        out.values["inverse_norm"] = inv_norm;
        out.values["inverse_norm_bound"] = inv_bound;
        out.values["accretivity_margin"] = margin;
        out.values["accretivity_lower_bound"] = margin_bound;

        const bool ok = inv_norm <= inv_bound + tol_.bound_slack &&
                        margin >= margin_bound - tol_.bound_slack;
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) {
            out.reason = "Lax-Milgram or accretivity bound violated";
            out.witness = witness_from(cert.witness);
        }
    }

    void check_sector(CheckResult& out) {
        const Form a0 = family_.at(0.0);
        const auto est = min_semiangle(a0, embed_, 0.0, tol_);
        const auto chk = sector_check(a0, embed_, 0.0, est.slope, tol_);
        report_.constants["slope"] = est.slope;
        out.values["slope"] = est.slope;
        out.values["margin"] = chk.margin;
        out.values["vertex"] = form_vertex(a0, embed_);

        const auto points = numerical_range_sample(a0, embed_, 512, sc_.seed);
        Table table;
        table.name = "numerical_range";
        table.columns = {"re", "im"};
        double worst = -std::numeric_limits<double>::infinity();
        for (Complex w : points) {
            table.rows.push_back({w.real(), w.imag()});
            worst = std::max(worst,
                             std::abs(w.imag()) - est.slope * w.real() -
                                 tol_.sample_slack * (1.0 + std::abs(w)));
        }
        report_.tables.push_back(std::move(table));
        out.values["worst_sample_violation"] = worst;

        const bool ok = chk.ok && worst <= 0.0;
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) {
            out.reason = "certified sector disagrees with the sampled numerical range";
            if (est.tight_witness.size() > 0) out.witness = witness_from(est.tight_witness);
        }
    }

    void check_uniform_sector(CheckResult& out) {
        const auto& cert = ensure_cert();
        report_.constants["C_big"] = cert.c_big;
        report_.constants["C0"] = cert.c0;
        report_.constants["slope_bound"] = cert.slope_bound;
        report_.constants["r"] = cert.radius;
        out.values["C_big"] = cert.c_big;
        out.values["C0"] = cert.c0;
        out.values["slope_bound"] = cert.slope_bound;
        out.values["radius"] = cert.radius;
        out.values["degenerate"] = cert.degenerate ? 1.0 : 0.0;

        const double half_gap = 1.0 / (2.0 * cert.c_big);
        const Form a0 = family_.at(0.0);
        Rng rng(sc_.seed ^ 0x753273656374ull);
        const Matrix& gram_v = space_v_->gram();

        Table table;
        table.name = "uniform_sector_samples";
        table.columns = {"re_z",  "im_z",        "op_gap",  "gap_bound",
                         "slope", "slope_bound", "eq_margin"};

        double worst = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (std::size_t j = 0; j < cert.boundary_samples.size(); ++j) {
            const Complex z = cert.boundary_samples[j];
            const Form az = family_.at(z);
            double sample_worst = std::numeric_limits<double>::infinity();
            for (int trial = 0; trial < 100; ++trial) {
                Vector u = rng.gaussian_vector(family_.dim());
                const double vn = std::sqrt(
                    std::max(0.0, (u.adjoint() * gram_v * u)(0).real()));
                u /= vn;
                const Complex q0 = a0.quad(u);
                const Complex qz = az.quad(u);
                const double re0 = q0.real();
                const double rez = qz.real();
                const double diff = std::abs(qz - q0);

                // the two-sided perturbation estimate and its consequences
                const double m1 = half_gap + tol_.sample_slack - diff;
                const double m2 = 0.5 * re0 + tol_.sample_slack - diff;
                const double m3 = rez - 0.5 * re0 + tol_.sample_slack;
                const double m4 = 0.5 * re0 - half_gap + tol_.sample_slack;
                const double m5 =
                    (cert.c0 + 0.5) * re0 + tol_.sample_slack - std::abs(qz.imag());
                const double m6 = (2.0 * cert.c0 + 1.0) * rez + tol_.sample_slack -
                                  (cert.c0 + 0.5) * re0;
                sample_worst = std::min({sample_worst, m1, m2, m3, m4, m5, m6});
            }
            worst = std::min(worst, sample_worst);
            ok = ok && sample_worst >= 0.0;

            const double slope_margin =
                cert.slope_bound + tol_.slope_chain_slack - cert.sample_slopes[j];
            ok = ok && slope_margin >= 0.0 &&
                 cert.sample_gaps[j] <= half_gap + tol_.sample_slack;
            table.rows.push_back({z.real(), z.imag(), cert.sample_gaps[j], half_gap,
                                  cert.sample_slopes[j], cert.slope_bound, sample_worst});
        }
        report_.tables.push_back(std::move(table));
        out.values["worst_sample_margin"] = worst;
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) out.reason = "a certified inequality failed on a boundary sample";
    }

    void check_norm_equiv(CheckResult& out) {
        if (skip_on_failed(CheckKind::uniform_sector, out)) return;
        const auto& cert = ensure_cert();
        const Form a0 = family_.at(0.0);

        Table table;
        table.name = "norm_equiv_samples";
        table.columns = {"re_z", "im_z", "ratio_min", "ratio_max"};
        bool ok = true;
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (const Complex& z : cert.boundary_samples) {
            const auto eq = norm_equivalence_check(a0, family_.at(z), embed_, tol_);
            ok = ok && eq.ok;
            lo = std::min(lo, eq.ratio_min);
            hi = std::max(hi, eq.ratio_max);
            table.rows.push_back({z.real(), z.imag(), eq.ratio_min, eq.ratio_max});
        }
        report_.tables.push_back(std::move(table));
        out.values["ratio_min"] = lo;
        out.values["ratio_max"] = hi;
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) out.reason = "a squared-norm ratio left [1/2, 3/2]";
    }

    void check_resolvent_holo(CheckResult& out) {
        if (skip_on_failed(CheckKind::uniform_sector, out)) return;
        const auto& rep = ensure_resolvent_holo();
        out.values["residual"] = rep.mean_value_residual;
        out.values["derivative_gap"] = rep.derivative_fd_gap;
        out.values["radius"] = rep.radius;
        out.values["node_count"] = rep.node_count;
        out.values["beyond_certificate"] = rep.beyond_certificate ? 1.0 : 0.0;

        Table table;
        table.name = "resolvent_holo_nodes";
        table.columns = {"node", "condition"};
        for (std::size_t i = 0; i < rep.node_conditions.size(); ++i)
            table.rows.push_back({double(i), rep.node_conditions[i]});
        report_.tables.push_back(std::move(table));

        out.status = rep.passed ? CheckStatus::pass : CheckStatus::fail;
        if (!rep.passed) {
            std::ostringstream msg;
            msg << "mean-value residual " << rep.mean_value_residual << " (tolerance "
                << tol_.holo_residual << "), derivative gap " << rep.derivative_fd_gap;
            out.reason = msg.str();
        }
    }

    void check_eq5(CheckResult& out) {
        if (skip_on_failed(CheckKind::laxmilgram, out)) return;
        const auto& assoc = ensure_assoc();
        const auto rep = resolvent_power_bound_check(
            assoc.op(), space_h_, sc_.semigroup.growth_m, sc_.semigroup.omega,
            sc_.semigroup.lambdas, sc_.semigroup.n_max, tol_);

        Table table;
        table.name = "eq5_power_bound";
        table.columns = {"lambda", "n", "norm", "bound", "margin"};
        for (const auto& row : rep.rows)
            table.rows.push_back(
                {row.lambda, double(row.n), row.norm, row.bound, row.bound - row.norm});
        report_.tables.push_back(std::move(table));

        out.values["worst_margin"] = rep.worst_margin;
        out.values["worst_lambda"] = rep.worst_lambda;
        out.values["worst_n"] = rep.worst_n;
        out.status = rep.ok ? CheckStatus::pass : CheckStatus::fail;
        if (!rep.ok) {
            std::ostringstream msg;
            msg << "power bound fails at lambda = " << rep.worst_lambda
                << ", n = " << rep.worst_n << " with margin " << rep.worst_margin;
            out.reason = msg.str();
        }
    }

    void check_eq6(CheckResult& out) {
        if (skip_on_failed(CheckKind::laxmilgram, out)) return;
        const auto& assoc = ensure_assoc();
        const auto table = exponential_formula_convergence(
            assoc.op(), space_h_, sc_.semigroup.t1, sc_.semigroup.n_list,
            sc_.semigroup.t_grid_points, tol_);

        Table csv;
        csv.name = "eq6_convergence";
        csv.columns = {"n", "sup_error"};
        for (std::size_t i = 0; i < table.n.size(); ++i)
            csv.rows.push_back({double(table.n[i]), table.sup_error[i]});
        report_.tables.push_back(std::move(csv));

        bool ok = table.nonincreasing;
        double worst_ratio = 0.0;
        for (std::size_t i = 0; i + 1 < table.n.size(); ++i) {
            if (table.n[i + 1] != 2 * table.n[i]) continue;
            if (table.sup_error[i] < tol_.noise_floor) continue;
            const double ratio = table.sup_error[i] / std::max(table.sup_error[i + 1], 1e-300);
            worst_ratio = worst_ratio == 0.0
                              ? ratio
                              : (std::abs(ratio - 2.0) > std::abs(worst_ratio - 2.0)
                                     ? ratio
                                     : worst_ratio);
            ok = ok && ratio >= tol_.eq6_ratio_lo && ratio <= tol_.eq6_ratio_hi;
        }
        out.values["worst_ratio"] = worst_ratio;
        for (std::size_t i = 0; i < table.n.size(); ++i)
            out.values["sup_error_n" + std::to_string(table.n[i])] = table.sup_error[i];
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) out.reason = "convergence table is not first order";
    }

    void check_thm4(CheckResult& out, bool operator_flavor) {
        if (skip_on_failed(CheckKind::uniform_sector, out)) return;
        if (skip_on_failed(CheckKind::resolvent_holo, out)) return;
        if (!rhol_) {
            // The holomorphy test is a hypothesis here, not an assumption:
            // run it even when not requested, and refuse to continue on failure.
            try {
                ensure_resolvent_holo();
            } catch (const Error& e) {
                out.status = CheckStatus::skip;
                out.reason = std::string("prerequisite resolvent_holo failed: ") + e.what();
                return;
            }
        }
        if (!rhol_->passed) {
            out.status = CheckStatus::skip;
            out.reason = "prerequisite resolvent_holo failed";
            return;
        }

        const auto& shared = ensure_semigroup_holo();
        const HolomorphyReport& rep =
            operator_flavor ? shared.operator_report : shared.vector_report;
        const double half = operator_flavor ? shared.half_operator_residual
                                            : shared.half_vector_residual;
        const double iterate = operator_flavor ? shared.iterate_operator_residual
                                               : shared.iterate_vector_residual;

        out.values["residual"] = rep.mean_value_residual;
        out.values["residual_half_nodes"] = half;
        out.values["iterate_residual"] = iterate;
        out.values["iterate_n"] = shared.iterate_n;
        out.values["node_count"] = rep.node_count;
        out.values["radius"] = rep.radius;
        out.values["min_node_accretivity"] = shared.min_node_accretivity;

        Table table;
        table.name = operator_flavor ? "thm4b_residuals" : "thm4a_residuals";
        table.columns = {"t", "residual"};
        const auto& per_t = operator_flavor ? shared.per_t_operator_residual
                                            : shared.per_t_vector_residual;
        for (std::size_t k = 0; k < shared.grid.size(); ++k)
            table.rows.push_back({shared.grid[k], per_t[k]});
        report_.tables.push_back(std::move(table));

        // Below the noise floor the node-count comparison is a tie: the gap
        // of an entire family underflows the trapezoid's rounding error.
        const bool decays = rep.mean_value_residual <= std::max(half, tol_.noise_floor);
        const bool ok = rep.passed && decays && iterate <= tol_.sg_residual;
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) {
            std::ostringstream msg;
            msg << "residual " << rep.mean_value_residual << " (half-node " << half
                << ", iterate " << iterate << ", tolerance " << tol_.sg_residual << ")";
            out.reason = msg.str();
        }
    }

    void check_remark_a(CheckResult& out) {
        if (skip_on_failed(CheckKind::uniform_sector, out)) return;
        if (skip_on_failed(CheckKind::resolvent_holo, out)) return;
        if (skip_on_failed(CheckKind::thm4a, out)) return;
        if (skip_on_failed(CheckKind::thm4b, out)) return;
        if (!rhol_) {
            try {
                ensure_resolvent_holo();
            } catch (const Error& e) {
                out.status = CheckStatus::skip;
                out.reason = std::string("prerequisite resolvent_holo failed: ") + e.what();
                return;
            }
        }
        if (!rhol_->passed) {
            out.status = CheckStatus::skip;
            out.reason = "prerequisite resolvent_holo failed";
            return;
        }

        const UniformSectorCertificate* cert = cert_if_available();
        std::optional<double> slope_bound;
        if (cert != nullptr) slope_bound = cert->slope_bound;

        const auto rep = sector_semigroup_check(
            family_, Complex(0.0, 0.0), holo_radius(), sc_.semigroup.theta_prime,
            sc_.semigroup.tau_radius, sc_.semigroup.tau_points, sc_.semigroup.tau_points,
            sc_.semigroup.growth_m, sc_.semigroup.omega, sc_.holo.node_count, slope_bound,
            tol_);

        out.values["theta_prime"] = rep.theta_prime;
        out.values["theta_gate"] = rep.theta_gate;
        out.values["residual"] = rep.residual;
        out.values["worst_growth_margin"] = rep.worst_growth_margin;

        Table table;
        table.name = "remark_a_residuals";
        table.columns = {"re_tau", "im_tau", "residual"};
        for (std::size_t k = 0; k < rep.taus.size(); ++k)
            table.rows.push_back(
                {rep.taus[k].real(), rep.taus[k].imag(), rep.per_tau_residual[k]});
        report_.tables.push_back(std::move(table));

        out.status = rep.passed ? CheckStatus::pass : CheckStatus::fail;
        if (!rep.passed) {
            std::ostringstream msg;
            if (!rep.bound_ok) {
                msg << errc_name(Errc::bound_violated) << ": growth bound fails at z = "
                    << rep.worst_z.real() << " + " << rep.worst_z.imag()
                    << "i, tau = " << rep.worst_tau.real() << " + " << rep.worst_tau.imag()
                    << "i (margin " << rep.worst_growth_margin << ")";
                out.witness = {rep.worst_z, rep.worst_tau};
            } else {
                msg << "sector residual " << rep.residual << " exceeds " << tol_.sg_residual;
            }
            out.reason = msg.str();
        }
    }

    const Scenario& sc_;
    Tolerances tol_;
    SpacePtr space_v_;
    SpacePtr space_h_;
    Embedding embed_;
    FormFamily raw_family_;
    FormFamily family_;
    double vertex_raw_ = 0.0;
    double shift_ = 0.0;
    Vector probe_;

    Report report_;
    std::map<CheckKind, CheckStatus> statuses_;
    std::optional<AssociatedOperator> assoc_;
    std::optional<UniformSectorCertificate> cert_;
    std::exception_ptr cert_error_;
    std::optional<HolomorphyReport> rhol_;
    std::optional<SemigroupHolomorphyResult> sg_holo_;
};

}  // namespace

Report run_scenario(const Scenario& scenario, double tol_scale) {
    return ScenarioRun(scenario, tol_scale).run();
}

}  // namespace holoform
