// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>

namespace holoform {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Central tolerance block. Every threshold used by a check is a named field
/// here, overridable per scenario; nothing is hard-coded at call sites.
struct Tolerances {
    double hermitian_rel = 1e-12;      // max-entry deviation of G - G* vs max entry of G
    double pd_floor = 0.0;             // smallest Gram eigenvalue must exceed this
    double invertibility_rel = 1e-14;  // sigma_min / sigma_max floor for embeddings
    double solve_residual_rel = 1e-10; // ||M u - c|| <= rel * ||c||
    double inverse_identity_rel = 1e-10;
    double defining_relation = 1e-10;  // associated-operator identity M = J* G_H A J
    double bound_slack = 1e-10;        // slack on certified inequalities (inverse norm, accretivity)
    double psd_rel = 1e-10;            // pencil counts as PSD if lambda_min >= -psd_rel * ||pencil||
    double vertex_match = 1e-8;        // |vertex - 1| tolerance for normalized families
    double sample_slack = 1e-10;       // slack on sampled form inequalities
    double slope_chain_slack = 1e-8;   // min_semiangle <= 2*C0 + 1 + slack
    double norm_equiv_slack = 1e-10;   // ratio bounds vs [1/2, 3/2]
    double bisect_rel = 1e-12;         // radius bisection relative tolerance
    double holo_residual = 1e-8;       // Cauchy mean-value residual threshold
    double deriv_gap_rel = 1e-6;       // Cauchy derivative vs finite difference
    double sg_residual = 1e-7;         // semigroup holomorphy residual threshold
    double growth_slack = 1e-10;       // ||T(t)|| <= M e^{w t} + slack
    double eq5_slack = 1e-10;
    double eq6_ratio_lo = 1.5;
    double eq6_ratio_hi = 2.5;
    double noise_floor = 1e-12;        // errors below this are monotonicity noise
    double spectrum_rel = 1e-12;       // singularity threshold for resolvent solves
    double theta_gate = 1e-12;         // slack on the sector gate comparison
    double snapshot_identity = 1e-12;  // ||T(0) - I||
    double semigroup_law = 1e-9;       // ||T(s+t) - T(s)T(t)|| on the grid

    /// Applies a named override; unknown keys are an error (reported by name).
    void set(const std::string& key, double value);
    /// Multiplies every threshold field by `factor` (CLI --tol-scale).
    void scale(double factor);
    static const std::map<std::string, double Tolerances::*>& fields();
};

}  // namespace holoform
