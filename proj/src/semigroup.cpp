// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/semigroup.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "holoform/laxmilgram.hpp"
#include "holoform/parallel.hpp"

namespace holoform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double h_op_norm(const Matrix& t, const SpacePtr& h) { return op_norm(t, primal(h), primal(h)); }

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

Matrix binary_power(Matrix base, long long exponent) {
    Matrix acc = Matrix::Identity(base.rows(), base.cols());
    while (exponent > 0) {
        if (exponent & 1) acc = acc * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return acc;
}

std::vector<double> uniform_grid(double t1, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = t1 * k / (points - 1);
    return grid;
}

bool grid_is_uniform(const std::vector<double>& grid) {
    if (grid.size() < 2 || grid.front() != 0.0) return false;
    const double step = grid[1] - grid[0];
    if (step <= 0.0) return false;
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (std::abs(grid[k] - step * double(k)) > 1e-12 * std::max(1.0, grid.back()))
            return false;
    return true;
}

/// T(t_k) = exp(-t_k a) for every grid point, stepping along uniform grids.
std::vector<Matrix> trajectory(const Matrix& a, const std::vector<double>& grid) {
    std::vector<Matrix> out;
    out.reserve(grid.size());
    if (grid_is_uniform(grid)) {
        const Matrix step = matrix_exponential(a, grid[1]);
        Matrix cur = Matrix::Identity(a.rows(), a.cols());
        out.push_back(cur);
        for (std::size_t k = 1; k < grid.size(); ++k) {
            cur = cur * step;
            out.push_back(cur);
        }
        return out;
    }
    for (double t : grid) out.push_back(matrix_exponential(a, t));
    return out;
}

}  // namespace

Matrix expm(const Matrix& m) {
    static const double pade_b[14] = {64764752532480000.0, 32382376266240000.0,
                                      7771770303897600.0,  1187353796428800.0,
                                      129060195264000.0,   10559470521600.0,
                                      670442572800.0,      33522128640.0,
                                      1323241920.0,        40840800.0,
                                      960960.0,            16380.0,
                                      182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;

    const Index n = m.rows();
    require(n == m.cols(), Errc::dimension_mismatch, "matrix exponential needs a square matrix");

    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    const Matrix scaled = m / std::pow(2.0, squarings);

    const Matrix ident = Matrix::Identity(n, n);
    const Matrix p2 = scaled * scaled;
    const Matrix p4 = p2 * p2;
    const Matrix p6 = p2 * p4;

    Matrix u = scaled * (p6 * (pade_b[13] * p6 + pade_b[11] * p4 + pade_b[9] * p2) +
                         pade_b[7] * p6 + pade_b[5] * p4 + pade_b[3] * p2 + pade_b[1] * ident);
    Matrix v = p6 * (pade_b[12] * p6 + pade_b[10] * p4 + pade_b[8] * p2) + pade_b[6] * p6 +
               pade_b[4] * p4 + pade_b[2] * p2 + pade_b[0] * ident;

    Matrix result = (v - u).partialPivLu().solve(v + u);
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Matrix matrix_exponential(const Matrix& a, Complex t) { return expm(Matrix(-t * a)); }

Matrix euler_value(const Matrix& a, double t, int n, const Tolerances& tol) {
    require(n >= 1, Errc::validation_error, "step count must be at least 1");
    const Index dim = a.rows();
    Matrix step = Matrix::Identity(dim, dim) + (t / n) * a;
    Eigen::PartialPivLU<Matrix> lu(step);
    if (lu.rcond() < tol.spectrum_rel) {
        std::ostringstream msg;
        msg << "I + (t/n) A is singular for t = " << t << ", n = " << n;
        throw Error(Errc::singular_step, msg.str());
    }
    Matrix inv = lu.solve(Matrix::Identity(dim, dim));
    return binary_power(std::move(inv), n);
}

EulerApprox euler_approx(const Matrix& a, double t, int n, const Tolerances& tol) {
    EulerApprox out;
    out.n = n;
    out.t = t;
    out.value = euler_value(a, t, n, tol);
    out.error = (out.value - matrix_exponential(a, t)).norm();
    return out;
}

PowerBoundReport resolvent_power_bound_check(const Matrix& a, const SpacePtr& h, double growth_m,
                                             double omega, std::span<const double> lambdas,
                                             int n_max, const Tolerances& tol) {
    require(growth_m >= 1.0, Errc::validation_error, "growth constant must be at least 1");
    PowerBoundReport report;
    report.worst_margin = std::numeric_limits<double>::infinity();

    const Index dim = a.rows();
    for (double lambda : lambdas) {
        if (!(lambda > 0.0) || !(lambda > omega)) {
            std::ostringstream msg;
            msg << "lambda = " << lambda << " must be positive and exceed omega = " << omega;
            throw Error(Errc::non_positive_lambda, msg.str());
        }
        Matrix shifted = lambda * Matrix::Identity(dim, dim) + a;
        Eigen::PartialPivLU<Matrix> lu(shifted);
        if (lu.rcond() < tol.spectrum_rel)
            throw Error(Errc::lambda_in_spectrum, "lambda + A is singular");
        const Matrix res = lu.solve(Matrix::Identity(dim, dim));

        Matrix power = Matrix::Identity(dim, dim);
        for (int n = 1; n <= n_max; ++n) {
            power = power * res;
            PowerBoundRow row;
            row.lambda = lambda;
            row.n = n;
            row.norm = h_op_norm(power, h);
            row.bound = growth_m / std::pow(lambda - omega, n);
            const double margin = row.bound - row.norm;
            if (margin < report.worst_margin) {
                report.worst_margin = margin;
                report.worst_lambda = lambda;
                report.worst_n = n;
            }
            report.rows.push_back(row);
        }
    }
    report.ok = report.worst_margin >= -tol.eq5_slack;
    return report;
}

ConvergenceTable exponential_formula_convergence(const Matrix& a, const SpacePtr& h, double t1,
                                                 std::span<const int> n_list, int grid_points,
                                                 const Tolerances& tol) {
    require(grid_points >= 2, Errc::validation_error, "t grid needs at least two points");
    require(t1 > 0.0, Errc::validation_error, "t1 must be positive");
    const auto grid = uniform_grid(t1, grid_points);

    // Reference values computed independently per grid point.
    auto exact = par::indexed_map(grid.size(),
                                  [&](std::size_t k) { return matrix_exponential(a, grid[k]); });

    ConvergenceTable table;
    for (int n : n_list) {
        require(n >= 1, Errc::validation_error, "step counts must be positive");
        double sup = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const Matrix approx = euler_value(a, grid[k], n, tol);
            sup = std::max(sup, h_op_norm(approx - exact[k], h));
        }
        table.n.push_back(n);
        table.sup_error.push_back(sup);
    }
    for (std::size_t i = 1; i < table.sup_error.size(); ++i)
        if (table.sup_error[i] > table.sup_error[i - 1] + tol.noise_floor)
            table.nonincreasing = false;
    return table;
}

SemigroupSnapshot take_snapshot(const Matrix& a, const SpacePtr& h, std::vector<double> grid,
                                double growth_m, double omega, const Tolerances& tol) {
    require(!grid.empty(), Errc::validation_error, "snapshot grid must be nonempty");
    std::sort(grid.begin(), grid.end());
    require(grid.front() >= 0.0, Errc::validation_error, "snapshot grid must be nonnegative");

    SemigroupSnapshot snap;
    snap.grid = grid;
    snap.growth_m = growth_m;
    snap.omega = omega;
    snap.values = par::indexed_map(grid.size(),
                                   [&](std::size_t k) { return matrix_exponential(a, grid[k]); });

    const Index dim = a.rows();
    snap.worst_growth_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid[k] == 0.0)
            snap.identity_dev = std::max(
                snap.identity_dev, (snap.values[k] - Matrix::Identity(dim, dim)).norm());
        const double bound = growth_m * std::exp(omega * grid[k]);
        snap.worst_growth_margin =
            std::min(snap.worst_growth_margin, bound - h_op_norm(snap.values[k], h));
    }
    require(snap.worst_growth_margin >= -tol.growth_slack, Errc::uniform_bound_unverified,
            "semigroup norm escapes the growth bound on the grid");
    require(snap.identity_dev <= tol.snapshot_identity, Errc::validation_error,
            "T(0) deviates from the identity");

    // Semigroup law wherever a grid sum lands back on the grid.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            const double sum = grid[i] + grid[j];
            for (std::size_t k = 0; k < grid.size(); ++k) {
                if (std::abs(grid[k] - sum) <= tol.noise_floor * std::max(1.0, sum)) {
                    snap.law_dev = std::max(
                        snap.law_dev, (snap.values[k] - snap.values[i] * snap.values[j]).norm());
                    break;
                }
            }
        }
    }
    require(snap.law_dev <= tol.semigroup_law, Errc::validation_error,
            "semigroup law fails on the grid");
    return snap;
}

namespace {

struct NodeBundle {
    std::vector<Matrix> traj;
    std::vector<Vector> vpath;
    Matrix iterate_op;
    Vector iterate_vec;
    double accretivity = 0.0;
    double growth_margin = 0.0;
    Complex z;
};

NodeBundle eval_semigroup_node(const FormFamily& family, Complex z,
                               const std::vector<double>& grid, const Vector& x, double t1,
                               int iterate_n, double growth_m, double omega, const SpacePtr& h,
                               const Tolerances& tol) {
    NodeBundle out;
    out.z = z;
    const Matrix a = family_operator(family, z);
    out.accretivity = accretivity_margin(a, *h);
    out.traj = trajectory(a, grid);
    out.vpath.reserve(grid.size());
    for (const Matrix& t : out.traj) out.vpath.push_back(t * x);
    out.iterate_op = euler_value(a, t1, iterate_n, tol);
    out.iterate_vec = out.iterate_op * x;

    if (growth_m == 1.0) {
        // Exact contraction certificate: ||exp(-t a)||_H <= e^{omega t} for
        // all t iff the accretivity margin is at least -omega.
        out.growth_margin = out.accretivity + omega;
    } else {
        out.growth_margin = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double bound = growth_m * std::exp(omega * grid[k]);
            out.growth_margin =
                std::min(out.growth_margin, bound - h_op_norm(out.traj[k], h));
        }
    }
    return out;
}

}  // namespace

SemigroupHolomorphyResult semigroup_holomorphy_check(const FormFamily& family, Complex z0,
                                                     double r, double t1, const Vector& x,
                                                     int node_count, double growth_m,
                                                     double omega, std::vector<double> grid,
                                                     const Tolerances& tol) {
    require(node_count >= 8 && is_pow2(node_count), Errc::validation_error,
            "node count must be a power of two, at least 8");
    require(x.size() == family.dim(), Errc::dimension_mismatch,
            "probe vector does not match the family dimension");
    if (grid.empty()) grid = uniform_grid(t1, 21);

    const SpacePtr& h = family.embedding().codomain();
    const Index dim = family.dim();
    const int iterate_n = 64;
    const std::size_t total = static_cast<std::size_t>(node_count) + 1;  // + center

    std::vector<Matrix> op_sum(grid.size(), Matrix::Zero(dim, dim));
    std::vector<Matrix> op_sum_even(grid.size(), Matrix::Zero(dim, dim));
    std::vector<Vector> vec_sum(grid.size(), Vector::Zero(dim));
    std::vector<Vector> vec_sum_even(grid.size(), Vector::Zero(dim));
    Matrix it_op_sum = Matrix::Zero(dim, dim);
    Vector it_vec_sum = Vector::Zero(dim);
    std::vector<Matrix> center_traj;
    std::vector<Vector> center_vpath;
    Matrix center_it_op;
    Vector center_it_vec;
    double min_accretivity = std::numeric_limits<double>::infinity();

    par::blocked_map_fold(
        total, 8,
        [&](std::size_t i) {
            const Complex z =
                i == total - 1
                    ? z0
                    : z0 + r * std::polar(1.0, kTwoPi * double(i) / node_count);
            return eval_semigroup_node(family, z, grid, x, t1, iterate_n, growth_m, omega, h,
                                       tol);
        },
        [&](std::size_t i, NodeBundle&& node) {
            if (node.growth_margin < -tol.growth_slack) {
                std::ostringstream msg;
                msg << "growth bound fails at node " << i << " (z = " << node.z.real() << " + "
                    << node.z.imag() << "i), margin " << node.growth_margin;
                throw Error(Errc::uniform_bound_unverified, msg.str());
            }
            min_accretivity = std::min(min_accretivity, node.accretivity);
            if (i == total - 1) {
                center_traj = std::move(node.traj);
                center_vpath = std::move(node.vpath);
                center_it_op = std::move(node.iterate_op);
                center_it_vec = std::move(node.iterate_vec);
                return;
            }
            for (std::size_t k = 0; k < grid.size(); ++k) {
                op_sum[k] += node.traj[k];
                vec_sum[k] += node.vpath[k];
                if (i % 2 == 0) {
                    op_sum_even[k] += node.traj[k];
                    vec_sum_even[k] += node.vpath[k];
                }
            }
            it_op_sum += node.iterate_op;
            it_vec_sum += node.iterate_vec;
        });

    SemigroupHolomorphyResult result;
    result.grid = grid;
    result.iterate_n = iterate_n;
    result.min_node_accretivity = min_accretivity;

    double sup_vec = 0.0, sup_op = 0.0, sup_vec_half = 0.0, sup_op_half = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Vector vgap = vec_sum[k] / double(node_count) - center_vpath[k];
        const Matrix ogap = op_sum[k] / double(node_count) - center_traj[k];
        const double v_res = h->norm(vgap);
        const double o_res = h_op_norm(ogap, h);
        result.per_t_vector_residual.push_back(v_res);
        result.per_t_operator_residual.push_back(o_res);
        sup_vec = std::max(sup_vec, v_res);
        sup_op = std::max(sup_op, o_res);

        const Vector vgap_half = vec_sum_even[k] / double(node_count / 2) - center_vpath[k];
        const Matrix ogap_half = op_sum_even[k] / double(node_count / 2) - center_traj[k];
        sup_vec_half = std::max(sup_vec_half, h->norm(vgap_half));
        sup_op_half = std::max(sup_op_half, h_op_norm(ogap_half, h));
    }
    result.half_vector_residual = sup_vec_half;
    result.half_operator_residual = sup_op_half;
    result.iterate_vector_residual = h->norm(it_vec_sum / double(node_count) - center_it_vec);
    result.iterate_operator_residual =
        h_op_norm(it_op_sum / double(node_count) - center_it_op, h);

    auto fill = [&](HolomorphyReport& rep, double residual) {
        rep.center = z0;
        rep.radius = r;
        rep.node_count = node_count;
        rep.mean_value_residual = residual;
        rep.derivative_fd_gap = 0.0;
        rep.passed = residual <= tol.sg_residual;
    };
    fill(result.vector_report, sup_vec);
    fill(result.operator_report, sup_op);
    return result;
}

SectorSemigroupReport sector_semigroup_check(const FormFamily& family, Complex z0, double r,
                                             double theta_prime, double tau_radius,
                                             int tau_radii, int tau_angles, double growth_m,
                                             double omega, int node_count,
                                             std::optional<double> slope_bound,
                                             const Tolerances& tol) {
    require(node_count >= 8 && is_pow2(node_count), Errc::validation_error,
            "node count must be a power of two, at least 8");
    require(theta_prime > 0.0 && theta_prime < std::numbers::pi / 2.0, Errc::validation_error,
            "theta_prime must lie in (0, pi/2)");
    require(tau_radius > 0.0 && tau_radii >= 1 && tau_angles >= 1, Errc::validation_error,
            "tau grid must be nonempty");

    SectorSemigroupReport report;
    report.theta_prime = theta_prime;
    if (slope_bound) {
        report.theta_gate = std::numbers::pi / 2.0 - std::atan(*slope_bound);
        if (theta_prime > report.theta_gate + tol.theta_gate) {
            std::ostringstream msg;
            msg << "theta_prime = " << theta_prime << " exceeds the certified semi-angle "
                << report.theta_gate;
            throw Error(Errc::sector_too_wide, msg.str());
        }
    }

    for (int i = 0; i < tau_radii; ++i) {
        const double rho = tau_radius * double(i + 1) / double(tau_radii);
        for (int j = 0; j < tau_angles; ++j) {
            const double psi = tau_angles == 1
                                   ? 0.0
                                   : -theta_prime + 2.0 * theta_prime * j / (tau_angles - 1);
            report.taus.push_back(std::polar(rho, psi));
        }
    }

    const SpacePtr& h = family.embedding().codomain();
    const Index dim = family.dim();
    const std::size_t total = static_cast<std::size_t>(node_count) + 1;

    struct TauBundle {
        std::vector<Matrix> values;
        Complex z;
    };

    std::vector<Matrix> tau_sum(report.taus.size(), Matrix::Zero(dim, dim));
    std::vector<Matrix> center_vals;
    report.bound_ok = true;
    report.worst_growth_margin = std::numeric_limits<double>::infinity();

    par::blocked_map_fold(
        total, 8,
        [&](std::size_t i) {
            const Complex z =
                i == total - 1
                    ? z0
                    : z0 + r * std::polar(1.0, kTwoPi * double(i) / node_count);
            TauBundle bundle;
            bundle.z = z;
            const Matrix a = family_operator(family, z);
            bundle.values.reserve(report.taus.size());
            for (const Complex& tau : report.taus)
                bundle.values.push_back(matrix_exponential(a, tau));
            return bundle;
        },
        [&](std::size_t i, TauBundle&& bundle) {
            for (std::size_t k = 0; k < report.taus.size(); ++k) {
                const double bound = growth_m * std::exp(omega * report.taus[k].real());
                const double margin = bound - h_op_norm(bundle.values[k], h);
                if (margin < report.worst_growth_margin) {
                    report.worst_growth_margin = margin;
                    report.worst_z = bundle.z;
                    report.worst_tau = report.taus[k];
                }
                if (margin < -tol.growth_slack) report.bound_ok = false;
            }
            if (i == total - 1) {
                center_vals = std::move(bundle.values);
            } else {
                for (std::size_t k = 0; k < report.taus.size(); ++k)
                    tau_sum[k] += bundle.values[k];
            }
        });

    for (std::size_t k = 0; k < report.taus.size(); ++k) {
        const Matrix gap = tau_sum[k] / double(node_count) - center_vals[k];
        report.per_tau_residual.push_back(h_op_norm(gap, h));
        report.residual = std::max(report.residual, report.per_tau_residual.back());
    }
    report.passed = report.bound_ok && report.residual <= tol.sg_residual;
    return report;
}

}  // namespace holoform
