// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "holoform/holo.hpp"

namespace holoform {

// Sign convention, used on every signature below: the stored operator A is
// the accretive one, the semigroup is T(t) = exp(-t A) (generator -A), and
// the backward iterate is (I + (t/n) A)^{-n}.

/// exp(m) by Pade-13 with scaling and squaring.
Matrix expm(const Matrix& m);

/// exp(-t a); complex t supported for sector evaluations.
Matrix matrix_exponential(const Matrix& a, Complex t);

struct EulerApprox {
    int n = 0;
    double t = 0.0;
    Matrix value;       // (I + (t/n) a)^{-n}
    double error = 0.0; // Frobenius distance to exp(-t a)
};

/// The backward-Euler iterate, built by binary powering of the single
/// inverse. Throws SingularStep when I + (t/n) a is singular.
EulerApprox euler_approx(const Matrix& a, double t, int n, const Tolerances& tol = {});
Matrix euler_value(const Matrix& a, double t, int n, const Tolerances& tol = {});

struct PowerBoundRow {
    double lambda = 0.0;
    int n = 0;
    double norm = 0.0;   // ||(lambda + a)^{-n}||_{H->H}
    double bound = 0.0;  // growth_m / (lambda - omega)^n
};

struct PowerBoundReport {
    bool ok = false;
    double worst_margin = 0.0;  // min over rows of bound - norm
    double worst_lambda = 0.0;
    int worst_n = 0;
    std::vector<PowerBoundRow> rows;
};

/// Checks ||(lambda + a)^{-n}||_H <= growth_m / (lambda - omega)^n for every
/// lambda in `lambdas` and 1 <= n <= n_max, in the H metric.
PowerBoundReport resolvent_power_bound_check(const Matrix& a, const SpacePtr& h, double growth_m,
                                             double omega, std::span<const double> lambdas,
                                             int n_max, const Tolerances& tol = {});

struct ConvergenceTable {
    std::vector<int> n;
    std::vector<double> sup_error;  // sup over the t grid, H->H norm
    bool nonincreasing = true;
};

/// sup over a t grid on [0, t1] of the iterate-vs-exponential error, per n.
ConvergenceTable exponential_formula_convergence(const Matrix& a, const SpacePtr& h, double t1,
                                                 std::span<const int> n_list,
                                                 int grid_points = 21,
                                                 const Tolerances& tol = {});

struct SemigroupSnapshot {
    std::vector<double> grid;
    std::vector<Matrix> values;
    double growth_m = 1.0;
    double omega = 0.0;
    double identity_dev = 0.0;        // ||T(0) - I||
    double law_dev = 0.0;             // worst ||T(s+t) - T(s) T(t)|| on the grid
    double worst_growth_margin = 0.0; // min of growth_m e^{omega t} - ||T(t)||_H
};

/// Samples T(t) = exp(-t a) on a grid and verifies the snapshot invariants.
SemigroupSnapshot take_snapshot(const Matrix& a, const SpacePtr& h, std::vector<double> grid,
                                double growth_m, double omega, const Tolerances& tol = {});

struct SemigroupHolomorphyResult {
    HolomorphyReport vector_report;    // z |-> T_z(.) x, sup-over-grid H-norm residual
    HolomorphyReport operator_report;  // z |-> T_z(t), sup-over-grid H->H residual
    std::vector<double> grid;
    std::vector<double> per_t_vector_residual;
    std::vector<double> per_t_operator_residual;
    double half_vector_residual = 0.0;    // same sweep at node_count / 2
    double half_operator_residual = 0.0;
    int iterate_n = 0;                    // fixed-n backward iterate, t = t1
    double iterate_vector_residual = 0.0;
    double iterate_operator_residual = 0.0;
    double min_node_accretivity = 0.0;
};

/// Mean-value residuals of the semigroup in z over circle nodes, uniformly
/// over the t grid, in both the strong (applied to x) and operator senses.
/// The growth pair (growth_m, omega) is certified on every node first;
/// growth_m = 1 is certified exactly through the accretivity margin.
/// Throws UniformBoundUnverified when a node escapes the bound.
SemigroupHolomorphyResult semigroup_holomorphy_check(const FormFamily& family, Complex z0,
                                                     double r, double t1, const Vector& x,
                                                     int node_count, double growth_m,
                                                     double omega,
                                                     std::vector<double> grid = {},
                                                     const Tolerances& tol = {});

struct SectorSemigroupReport {
    double theta_gate = 0.0;   // pi/2 - arctan(slope bound); 0 when ungated
    double theta_prime = 0.0;
    std::vector<Complex> taus;
    bool bound_ok = false;
    double worst_growth_margin = 0.0;
    Complex worst_z;
    Complex worst_tau;
    double residual = 0.0;  // sup over taus of the z mean-value residual, H->H
    std::vector<double> per_tau_residual;
    bool passed = false;
};

/// Evaluates T_z(tau) on a truncated-sector tau grid for every circle node,
/// verifies ||T_z(tau)||_H <= growth_m e^{omega Re tau}, and reports the z
/// mean-value residual uniformly over the grid. With a certified slope bound
/// the angle is gated: theta_prime beyond pi/2 - arctan(slope) raises
/// SectorTooWide. Bound violations are report content, with the offending
/// (z, tau) pair.
SectorSemigroupReport sector_semigroup_check(const FormFamily& family, Complex z0, double r,
                                             double theta_prime, double tau_radius,
                                             int tau_radii, int tau_angles, double growth_m,
                                             double omega, int node_count,
                                             std::optional<double> slope_bound,
                                             const Tolerances& tol = {});

}  // namespace holoform
