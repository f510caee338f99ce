// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/laxmilgram.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <sstream>

namespace holoform {

CoercivityCertificate coercivity_constant(const Form& form) {
    const Matrix& gram = form.space()->gram();
    Matrix herm = form.herm_re();
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(herm, gram);
    require(es.info() == Eigen::Success, Errc::singular_gram, "coercivity eigensolve failed");

    const double alpha = es.eigenvalues()(0);
    Vector witness = es.eigenvectors().col(0);
    witness /= form.space()->norm(witness);
    if (!(alpha > 0.0)) {
        std::ostringstream msg;
        msg << "smallest Re-part eigenvalue " << alpha << " is not positive; witness [";
        for (Index i = 0; i < witness.size() && i < 8; ++i)
            msg << (i ? ", " : "") << witness(i).real() << (witness(i).imag() < 0 ? " - " : " + ")
                << std::abs(witness(i).imag()) << "i";
        msg << (witness.size() > 8 ? ", ...]" : "]");
        throw Error(Errc::not_coercive, msg.str());
    }
    return {alpha, std::move(witness)};
}

Vector laxmilgram_solve(const Form& form, const DualVector& f, const Tolerances& tol) {
    require(f.coeffs.size() == form.dim(), Errc::dimension_mismatch,
            "right-hand side does not match the form dimension");
    coercivity_constant(form);  // throws NotCoercive on failure

    Eigen::PartialPivLU<Matrix> lu(form.mat());
    Vector u = lu.solve(f.coeffs);
    const double rhs_norm = f.coeffs.norm();
    const double residual = (form.mat() * u - f.coeffs).norm();
    if (residual > tol.solve_residual_rel * std::max(rhs_norm, 1e-300)) {
        std::ostringstream msg;
        msg << "solve residual " << residual << " exceeds " << tol.solve_residual_rel
            << " * ||rhs||; rcond estimate " << lu.rcond();
        throw Error(Errc::solve_failed, msg.str());
    }
    return u;
}

double laxmilgram_inverse_norm(const Form& form) {
    coercivity_constant(form);
    Eigen::PartialPivLU<Matrix> lu(form.mat());
    Matrix inv = lu.solve(Matrix::Identity(form.dim(), form.dim()));
    return op_norm(inv, antidual(form.space()), primal(form.space()));
}

DualVector canonical_injection(const Embedding& embedding, const Vector& y) {
    require(y.size() == embedding.dim(), Errc::dimension_mismatch,
            "vector does not live in the codomain");
    Vector coeffs = embedding.map().adjoint() * (embedding.codomain()->gram() * y);
    return {embedding.domain(), std::move(coeffs)};
}

AssociatedOperator::AssociatedOperator(Form form, Embedding embedding, Matrix op_mat,
                                       Matrix inv_mat, double alpha)
    : form_(std::move(form)),
      embedding_(std::move(embedding)),
      op_mat_(std::move(op_mat)),
      inv_mat_(std::move(inv_mat)),
      alpha_(alpha) {}

AssociatedOperator AssociatedOperator::build(const Form& form, const Embedding& embedding,
                                             const Tolerances& tol) {
    require(form.dim() == embedding.dim(), Errc::dimension_mismatch,
            "form and embedding domains disagree");
    const auto cert = coercivity_constant(form);

    const Index n = form.dim();
    Eigen::PartialPivLU<Matrix> lu(form.mat());
    Matrix m_inv = lu.solve(Matrix::Identity(n, n));
    Matrix inv_mat = embedding.map() * m_inv * embedding.map().adjoint() *
                     embedding.codomain()->gram();

    Eigen::PartialPivLU<Matrix> lu_inv(inv_mat);
    Matrix op_mat = lu_inv.solve(Matrix::Identity(n, n));

    const double id_dev = (op_mat * inv_mat - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    require(id_dev <= tol.inverse_identity_rel * std::max(1.0, op_mat.cwiseAbs().maxCoeff()),
            Errc::solve_failed, "operator inverse pair fails the identity check");

    // a(u, v) = <A j u, j v>_H for all u, v, i.e. M = J^* G_H A J.
    Matrix reconstructed = embedding.map().adjoint() * embedding.codomain()->gram() * op_mat *
                           embedding.map();
    const double rel = (reconstructed - form.mat()).cwiseAbs().maxCoeff() /
                       std::max(form.mat().cwiseAbs().maxCoeff(), 1e-300);
    require(rel <= tol.defining_relation, Errc::solve_failed,
            "defining relation violated beyond tolerance");

    return AssociatedOperator(form, embedding, std::move(op_mat), std::move(inv_mat), cert.alpha);
}

double accretivity_margin(const Matrix& op_mat, const HilbertSpace& space) {
    Matrix weighted = space.gram() * op_mat;
    Matrix herm = 0.5 * (weighted + weighted.adjoint());
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(herm, space.gram(),
                                                        Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    require(es.info() == Eigen::Success, Errc::singular_gram, "accretivity eigensolve failed");
    return es.eigenvalues()(0);
}

double accretivity_margin(const AssociatedOperator& op) {
    return accretivity_margin(op.op(), *op.space());
}

}  // namespace holoform
