// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace holoform {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

HilbertSpace::HilbertSpace(Matrix gram, double smallest_eig)
    : gram_(std::move(gram)), smallest_eig_(smallest_eig), llt_(gram_) {}

SpacePtr HilbertSpace::make(Matrix gram, const Tolerances& tol) {
    require(gram.rows() == gram.cols(), Errc::dimension_mismatch, "gram matrix must be square");
    require(gram.rows() > 0, Errc::dimension_mismatch, "gram matrix must be nonempty");

    const double scale = max_abs(gram);
    const double herm_dev = max_abs(gram - gram.adjoint());
    if (herm_dev > tol.hermitian_rel * std::max(scale, 1e-300)) {
        std::ostringstream msg;
        msg << "gram deviates from its adjoint by " << herm_dev << " (max entry " << scale << ")";
        fail(Errc::not_hermitian, msg.str());
    }
    Matrix herm_gram = 0.5 * (gram + gram.adjoint());

    Eigen::SelfAdjointEigenSolver<Matrix> es(herm_gram, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues()(0);
    if (!(lambda_min > tol.pd_floor)) {
        std::ostringstream msg;
        msg << "smallest eigenvalue " << lambda_min << " is not positive";
        fail(Errc::not_positive_definite, msg.str());
    }
    return SpacePtr(new HilbertSpace(std::move(herm_gram), lambda_min));
}

Complex HilbertSpace::inner(const Vector& x, const Vector& y) const {
    require(x.size() == dim() && y.size() == dim(), Errc::dimension_mismatch,
            "inner product arguments must match the space dimension");
    return (y.adjoint() * gram_ * x)(0);
}

double HilbertSpace::norm(const Vector& x) const {
    double sq = inner(x, x).real();
    return std::sqrt(std::max(0.0, sq));
}

SpacePtr standard_space(Index dim) { return HilbertSpace::make(Matrix::Identity(dim, dim)); }

Complex dual_pair(const DualVector& f, const Vector& v) {
    require(v.size() == f.coeffs.size(), Errc::dimension_mismatch,
            "dual pairing arguments must match the space dimension");
    return (v.adjoint() * f.coeffs)(0);
}

double dual_norm(const DualVector& f) {
    require(f.space && f.coeffs.size() == f.space->dim(), Errc::dimension_mismatch,
            "dual vector does not match its space");
    Vector solved = f.space->gram_solve(f.coeffs);
    double sq = (f.coeffs.adjoint() * solved)(0).real();
    return std::sqrt(std::max(0.0, sq));
}

namespace {

Matrix side_metric(const SpaceRef& ref) {
    const Matrix& gram = ref.space->gram();
    if (!ref.is_dual) return gram;
    const Matrix ident = Matrix::Identity(gram.rows(), gram.cols());
    Matrix inv = ref.space->gram_solve(ident);
    // symmetrize against roundoff before feeding the eigensolver
    return 0.5 * (inv + inv.adjoint());
}

}  // namespace

double op_norm(const Matrix& map, const SpaceRef& from, const SpaceRef& to) {
    require(from.space && to.space, Errc::dimension_mismatch, "op_norm needs both sides");
    require(map.cols() == from.space->dim() && map.rows() == to.space->dim(),
            Errc::dimension_mismatch, "map dimensions do not match the given sides");

    Matrix target_metric = side_metric(to);
    Matrix source_metric = side_metric(from);
    Matrix lhs = map.adjoint() * target_metric * map;
    lhs = symmetrized(lhs);

    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(lhs, source_metric,
                                                        Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    require(es.info() == Eigen::Success, Errc::singular_gram,
            "generalized eigensolve failed; source metric too ill-conditioned");
    double lambda_max = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, lambda_max));
}

Form::Form(SpacePtr space, Matrix mat) : space_(std::move(space)), mat_(std::move(mat)) {
    require(space_ != nullptr, Errc::dimension_mismatch, "form needs a space");
    require(mat_.rows() == mat_.cols() && mat_.rows() == space_->dim(), Errc::dimension_mismatch,
            "form matrix must be square with the space dimension");
}

Complex Form::operator()(const Vector& u, const Vector& v) const {
    require(u.size() == dim() && v.size() == dim(), Errc::dimension_mismatch,
            "form arguments must match the space dimension");
    return (v.adjoint() * mat_ * u)(0);
}

Embedding::Embedding(SpacePtr domain, SpacePtr codomain, Matrix map, const Tolerances& tol)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    require(domain_ && codomain_, Errc::dimension_mismatch, "embedding needs both spaces");
    require(domain_->dim() == codomain_->dim(), Errc::dimension_mismatch,
            "embedding spaces must have equal dimension");
    require(map_.rows() == map_.cols() && map_.rows() == domain_->dim(), Errc::dimension_mismatch,
            "embedding matrix must be square with the space dimension");

    Eigen::JacobiSVD<Matrix> svd(map_);
    sigma_min_ = svd.singularValues()(svd.singularValues().size() - 1);
    const double sigma_max = svd.singularValues()(0);
    require(sigma_min_ > tol.invertibility_rel * sigma_max && sigma_min_ > 0.0,
            Errc::singular_gram, "embedding matrix is numerically singular");

    pullback_ = map_.adjoint() * codomain_->gram() * map_;
    pullback_ = symmetrized(pullback_);
    bound_c_ = op_norm(map_, primal(domain_), primal(codomain_));
}

Vector Embedding::apply(const Vector& u) const {
    require(u.size() == dim(), Errc::dimension_mismatch, "embedding argument dimension");
    return map_ * u;
}

double Embedding::image_norm(const Vector& u) const {
    require(u.size() == dim(), Errc::dimension_mismatch, "embedding argument dimension");
    double sq = (u.adjoint() * pullback_ * u)(0).real();
    return std::sqrt(std::max(0.0, sq));
}

Embedding identity_embedding(const SpacePtr& domain, const SpacePtr& codomain,
                             const Tolerances& tol) {
    return Embedding(domain, codomain, Matrix::Identity(domain->dim(), domain->dim()), tol);
}

}  // namespace holoform
