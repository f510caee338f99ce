// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/holo.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <sstream>

#include "holoform/parallel.hpp"

namespace holoform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kBoundarySamples = 25;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

FormFamily::FormFamily(Embedding embedding, std::vector<Matrix> coeffs, double domain_radius)
    : embedding_(std::move(embedding)), coeffs_(std::move(coeffs)), domain_radius_(domain_radius) {
    require(!coeffs_.empty(), Errc::validation_error, "family needs at least one coefficient");
    require(domain_radius_ > 0.0, Errc::validation_error, "domain radius must be positive");
    for (const Matrix& m : coeffs_)
        require(m.rows() == embedding_.dim() && m.cols() == embedding_.dim(),
                Errc::dimension_mismatch, "coefficient matrix dimension mismatch");
}

Matrix FormFamily::matrix_at(Complex z) const {
    if (std::abs(z) > domain_radius_ * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "|z| = " << std::abs(z) << " exceeds the domain radius " << domain_radius_;
        throw Error(Errc::outside_domain, msg.str());
    }
    Matrix acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = z * acc + *it;
    return acc;
}

Form FormFamily::at(Complex z) const { return Form(embedding_.domain(), matrix_at(z)); }

FormFamily FormFamily::shifted(double s) const {
    std::vector<Matrix> coeffs = coeffs_;
    coeffs[0] = coeffs[0] + Complex(s, 0.0) * embedding_.pullback_gram();
    return FormFamily(embedding_, std::move(coeffs), domain_radius_);
}

UniformSectorCertificate perturbation_radius(const FormFamily& family, const Tolerances& tol) {
    const Embedding& embed = family.embedding();
    const Form a0 = family.at(0.0);

    const double vertex = form_vertex(a0, embed);
    if (std::abs(vertex - 1.0) > tol.vertex_match) {
        std::ostringstream msg;
        msg << "vertex of the center form is " << vertex << ", expected 1";
        throw Error(Errc::not_normalized, msg.str());
    }

    // ||u||_V^2 <= C Re a_0(u): largest generalized eigenvalue of G_V
    // against the real part (positive definite since the vertex is 1).
    Matrix re0 = a0.herm_re();
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(a0.space()->gram(), re0,
                                                        Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    require(es.info() == Eigen::Success, Errc::singular_gram, "C eigensolve failed");

    UniformSectorCertificate cert;
    cert.c_big = es.eigenvalues().maxCoeff();
    cert.c0 = min_semiangle(a0, embed, 0.0, tol).slope;
    cert.slope_bound = 2.0 * cert.c0 + 1.0;

    double tail_total = 0.0;
    for (std::size_t k = 1; k < family.coeffs().size(); ++k) {
        const double nk = op_norm(family.coeffs()[k], primal(embed.domain()),
                                  antidual(embed.domain()));
        cert.coeff_norms.push_back(nk);
        tail_total += nk;
    }
    cert.degenerate = tail_total == 0.0;

    const double target = 1.0 / (2.0 * cert.c_big);
    const double big_r = family.domain_radius();
    auto tail = [&](double r) {
        double sum = 0.0;
        double power = 1.0;
        for (double nk : cert.coeff_norms) {
            power *= r;
            sum += power * nk;
        }
        return sum;
    };
    if (cert.degenerate || tail(big_r) <= target) {
        cert.radius = big_r;
    } else {
        double lo = 0.0, hi = big_r;
        while (hi - lo > tol.bisect_rel * hi) {
            const double mid = 0.5 * (lo + hi);
            (tail(mid) <= target ? lo : hi) = mid;
        }
        cert.radius = lo;
    }

    // Boundary evidence: the operator gap stays below 1/(2C) and the shifted
    // family stays in the vertex-0 sector of slope 2 c0 + 1.
    const Matrix m0 = family.coeffs()[0];
    for (int j = 0; j < kBoundarySamples; ++j) {
        const Complex z = cert.radius * std::polar(1.0, kTwoPi * j / kBoundarySamples);
        cert.boundary_samples.push_back(z);
        const Matrix gap_mat = family.matrix_at(z) - m0;
        const double gap = op_norm(gap_mat, primal(embed.domain()), antidual(embed.domain()));
        cert.sample_gaps.push_back(gap);
        require(gap <= target + tol.bound_slack, Errc::validation_error,
                "certificate violated: operator gap exceeds 1/(2C) at a boundary sample");

        const Form az = family.at(z);
        const auto sec = sector_check(az, embed, 0.0, cert.slope_bound, tol);
        require(sec.ok, Errc::validation_error,
                "certificate violated: sector check failed at a boundary sample");
        cert.sample_slopes.push_back(min_semiangle(az, embed, 0.0, tol).slope);
    }
    return cert;
}

std::vector<Matrix> circle_values(const MatrixFn& fn, Complex z0, double r, int node_count,
                                  Errc wrap) {
    require(node_count >= 8 && is_pow2(node_count), Errc::validation_error,
            "node count must be a power of two, at least 8");
    require(r > 0.0, Errc::validation_error, "circle radius must be positive");
    return par::indexed_map(static_cast<std::size_t>(node_count), [&](std::size_t n) {
        const Complex z = z0 + r * std::polar(1.0, kTwoPi * double(n) / node_count);
        try {
            return fn(z);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "node " << n << " (z = " << z.real() << (z.imag() < 0 ? " - " : " + ")
                << std::abs(z.imag()) << "i): " << e.what();
            throw Error(wrap, msg.str());
        }
    });
}

Matrix circle_mean(const std::vector<Matrix>& nodes) {
    Matrix acc = Matrix::Zero(nodes.front().rows(), nodes.front().cols());
    for (const Matrix& m : nodes) acc += m;
    return acc / double(nodes.size());
}

Matrix cauchy_derivative(const std::vector<Matrix>& nodes, double r) {
    const int n_count = static_cast<int>(nodes.size());
    Matrix acc = Matrix::Zero(nodes.front().rows(), nodes.front().cols());
    for (int n = 0; n < n_count; ++n)
        acc += nodes[static_cast<std::size_t>(n)] * std::polar(1.0, -kTwoPi * n / n_count);
    return acc / (double(n_count) * r);
}

double cauchy_residual(const MatrixFn& fn, Complex z0, double r, int node_count) {
    auto nodes = circle_values(fn, z0, r, node_count, Errc::evaluation_failure);
    return (circle_mean(nodes) - fn(z0)).norm();
}

Matrix family_operator(const FormFamily& family, Complex z) {
    const Embedding& embed = family.embedding();
    const Matrix m = family.matrix_at(z);
    // A_z = G_H^{-1} J^{-*} M(z) J^{-1}
    Eigen::PartialPivLU<Matrix> lu_j(embed.map());
    const Matrix left = lu_j.adjoint().solve(m);  // J^{-*} M
    const Matrix left_adj = left.adjoint();
    const Matrix right_adj = lu_j.adjoint().solve(left_adj);  // J^{-*} (J^{-*} M)^*
    const Matrix right = right_adj.adjoint();                 // (J^{-*} M) J^{-1}
    return embed.codomain()->gram_solve(right);
}

Matrix resolvent(const FormFamily& family, Complex z, Complex lambda, const Tolerances& tol) {
    const Embedding& embed = family.embedding();
    const Index n = family.dim();

    if (lambda == Complex(0.0, 0.0)) {
        const Matrix m = family.matrix_at(z);
        Eigen::PartialPivLU<Matrix> lu(m);
        if (lu.rcond() < tol.spectrum_rel) {
            std::ostringstream msg;
            msg << "operator is singular at z (rcond " << lu.rcond() << ")";
            throw Error(Errc::lambda_in_spectrum, msg.str());
        }
        Matrix m_inv = lu.solve(Matrix::Identity(n, n));
        return -(embed.map() * m_inv * embed.map().adjoint() * embed.codomain()->gram());
    }

    Matrix shifted = lambda * Matrix::Identity(n, n) - family_operator(family, z);
    Eigen::PartialPivLU<Matrix> lu(shifted);
    if (lu.rcond() < tol.spectrum_rel) {
        std::ostringstream msg;
        msg << "lambda = " << lambda.real() << " + " << lambda.imag()
            << "i is in the spectrum to tolerance (rcond " << lu.rcond() << ")";
        throw Error(Errc::lambda_in_spectrum, msg.str());
    }
    return lu.solve(Matrix::Identity(n, n));
}

HolomorphyReport resolvent_holomorphy_check(const FormFamily& family, Complex z0, Complex lambda,
                                            double r, int node_count, const Tolerances& tol,
                                            const UniformSectorCertificate* cert) {
    require(node_count >= 8 && is_pow2(node_count), Errc::validation_error,
            "node count must be a power of two, at least 8");
    HolomorphyReport report;
    report.center = z0;
    report.radius = r;
    report.node_count = node_count;
    report.beyond_certificate = cert != nullptr && r > cert->radius * (1.0 + 1e-12);

    struct NodeData {
        Matrix value;
        double condition;
    };
    auto eval = [&](Complex z) -> NodeData {
        Matrix res = resolvent(family, z, lambda, tol);
        const Matrix forward = lambda * Matrix::Identity(family.dim(), family.dim()) -
                               family_operator(family, z);
        return {std::move(res), forward.norm() * res.norm()};
    };

    auto nodes = par::indexed_map(static_cast<std::size_t>(node_count), [&](std::size_t n) {
        const Complex z = z0 + r * std::polar(1.0, kTwoPi * double(n) / node_count);
        try {
            return eval(z);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "node " << n << ": " << e.what();
            throw Error(e.code() == Errc::lambda_in_spectrum ? Errc::node_spectrum_hit
                                                             : Errc::evaluation_failure,
                        msg.str());
        }
    });

    const NodeData center = eval(z0);
    std::vector<Matrix> values;
    values.reserve(nodes.size());
    for (auto& nd : nodes) {
        values.push_back(std::move(nd.value));
        report.node_conditions.push_back(nd.condition);
    }

    const SpacePtr& h = family.embedding().codomain();
    Matrix gap = circle_mean(values) - center.value;
    report.mean_value_residual = op_norm(gap, primal(h), primal(h));

    const double h_step = r / 100.0;
    Matrix d_cauchy = cauchy_derivative(values, r);
    Matrix d_fd = (resolvent(family, z0 + h_step, lambda, tol) -
                   resolvent(family, z0 - h_step, lambda, tol)) /
                  (2.0 * h_step);
    const double denom = std::max({d_cauchy.norm(), d_fd.norm(), center.value.norm() / r});
    report.derivative_fd_gap = (d_cauchy - d_fd).norm() / std::max(denom, 1e-300);

    report.passed = report.mean_value_residual <= tol.holo_residual &&
                    report.derivative_fd_gap <= tol.deriv_gap_rel;
    return report;
}

}  // namespace holoform
