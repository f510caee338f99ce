// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "holoform/hilbert.hpp"
#include "holoform/sector.hpp"

namespace holoform {

/// Polynomial family of forms M(z) = sum z^k M_k on the closed disc
/// |z| <= domain_radius, over a fixed embedding. Scalar evaluations
/// z |-> a_z(u, v) are polynomials, hence entire, so the family is
/// holomorphic by construction.
class FormFamily {
  public:
    FormFamily(Embedding embedding, std::vector<Matrix> coeffs, double domain_radius);

    const Embedding& embedding() const { return embedding_; }
    const std::vector<Matrix>& coeffs() const { return coeffs_; }
    double domain_radius() const { return domain_radius_; }
    Index dim() const { return embedding_.dim(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Horner evaluation; throws OutsideDomain beyond the closed disc.
    Form at(Complex z) const;
    Matrix matrix_at(Complex z) const;

    /// Adds s * ||j(.)||_H^2 to the constant coefficient; the vertex of the
    /// z = 0 form moves by exactly s.
    FormFamily shifted(double s) const;

  private:
    Embedding embedding_;
    std::vector<Matrix> coeffs_;
    double domain_radius_;
};

/// Locally uniform sector data for a normalized family (vertex of a_0 equal
/// to 1): the coercivity-equivalence constant C with ||u||_V^2 <= C Re a_0(u),
/// the slope c0 of a_0 at vertex 0, the disc radius on which the coefficient
/// tail stays below 1/(2C), and the boundary-sample evidence.
struct UniformSectorCertificate {
    double radius = 0.0;
    double c_big = 0.0;
    double c0 = 0.0;
    double slope_bound = 0.0;  // 2*c0 + 1
    bool degenerate = false;   // no nonconstant coefficients: radius = domain radius
    std::vector<double> coeff_norms;       // ||M_k||_{V->V*}, k >= 1
    std::vector<Complex> boundary_samples; // 25 points on |z| = radius
    std::vector<double> sample_gaps;       // ||A_z - A_0||_{V->V*} per sample
    std::vector<double> sample_slopes;     // minimal vertex-0 slope per sample
};

UniformSectorCertificate perturbation_radius(const FormFamily& family,
                                             const Tolerances& tol = {});

using MatrixFn = std::function<Matrix(Complex)>;

/// Values of fn at the node_count-th roots of unity scaled onto the circle
/// |z - z0| = r, in index order. Node evaluations run through the parallel
/// kernel; a throwing node is reported with its index under `wrap`.
std::vector<Matrix> circle_values(const MatrixFn& fn, Complex z0, double r, int node_count,
                                  Errc wrap = Errc::evaluation_failure);

Matrix circle_mean(const std::vector<Matrix>& nodes);

/// Trapezoidal Cauchy first derivative (1/(N r)) sum f_n e^{-i theta_n}.
Matrix cauchy_derivative(const std::vector<Matrix>& nodes, double r);

/// Frobenius norm of the trapezoidal mean-value gap
/// (1/N) sum fn(z0 + r e^{i theta_n}) - fn(z0); spectrally small iff fn is
/// holomorphic on a neighbourhood of the closed disc.
double cauchy_residual(const MatrixFn& fn, Complex z0, double r, int node_count);

/// The operator of the z-form in H coordinates (no coercivity needed, only
/// the invertibility of the embedding).
Matrix family_operator(const FormFamily& family, Complex z);

/// (lambda - A_z)^{-1} in H coordinates. The lambda = 0 value is the
/// composition -(J M(z)^{-1} J^* G_H); other lambdas are dense solves on
/// (lambda I - A_z). Throws LambdaInSpectrum at singular points.
Matrix resolvent(const FormFamily& family, Complex z, Complex lambda,
                 const Tolerances& tol = {});

struct HolomorphyReport {
    Complex center;
    double radius = 0.0;
    int node_count = 0;
    double mean_value_residual = 0.0;
    double derivative_fd_gap = 0.0;
    std::vector<double> node_conditions;
    bool beyond_certificate = false;
    bool passed = false;
};

/// Mean-value residual of z |-> (lambda - A_z)^{-1} in the H->H norm, plus
/// the gap between the Cauchy-formula first derivative and a central finite
/// difference of step r/100. Passes iff the residual is below holo_residual
/// and the gap below deriv_gap_rel. A radius beyond the certificate is
/// flagged but still evaluated.
HolomorphyReport resolvent_holomorphy_check(const FormFamily& family, Complex z0, Complex lambda,
                                            double r, int node_count, const Tolerances& tol = {},
                                            const UniformSectorCertificate* cert = nullptr);

}  // namespace holoform
