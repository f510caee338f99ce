// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/sector.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "holoform/parallel.hpp"
#include "holoform/rng.hpp"

namespace holoform {

namespace {

double spectral_scale(const Eigen::VectorXd& eigs) {
    return std::max(std::abs(eigs(0)), std::abs(eigs(eigs.size() - 1)));
}

}  // namespace

SectorCheckResult sector_check(const Form& form, const Embedding& embedding, double gamma,
                               double slope, const Tolerances& tol) {
    require(slope >= 0.0, Errc::validation_error, "sector slope must be nonnegative");
    require(form.dim() == embedding.dim(), Errc::dimension_mismatch,
            "form and embedding dimensions disagree");

    const Matrix& pulled = embedding.pullback_gram();
    Matrix base = slope * (form.herm_re() - gamma * pulled);
    Matrix skew = form.herm_im();

    Eigen::SelfAdjointEigenSolver<Matrix> metric(pulled, Eigen::EigenvaluesOnly);
    const double metric_norm = metric.eigenvalues().maxCoeff();

    bool ok = true;
    double min_eig = std::numeric_limits<double>::infinity();
    for (int sign : {-1, +1}) {
        Matrix pencil = base + double(sign) * skew;
        pencil = symmetrized(pencil);
        Eigen::SelfAdjointEigenSolver<Matrix> es(pencil, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues()(0);
        const double scale = spectral_scale(es.eigenvalues());
        ok = ok && lo >= -tol.psd_rel * std::max(scale, 1e-300);
        min_eig = std::min(min_eig, lo);
    }
    return {ok, min_eig / std::max(metric_norm, 1e-300)};
}

SectorEstimate min_semiangle(const Form& form, const Embedding& embedding, double gamma,
                             const Tolerances& tol) {
    require(form.dim() == embedding.dim(), Errc::dimension_mismatch,
            "form and embedding dimensions disagree");
    Matrix base = form.herm_re() - gamma * embedding.pullback_gram();
    base = symmetrized(base);
    Matrix skew = form.herm_im();
    const double skew_scale = skew.cwiseAbs().maxCoeff();

    Eigen::SelfAdjointEigenSolver<Matrix> es(base);
    const Eigen::VectorXd eigs = es.eigenvalues();
    const double scale = spectral_scale(eigs);
    const double kernel_tol = tol.psd_rel * std::max(scale, 1e-300);
    if (eigs(0) < -kernel_tol) {
        std::ostringstream msg;
        msg << "real-part pencil has eigenvalue " << eigs(0) << " at vertex " << gamma;
        throw Error(Errc::vertex_too_large, msg.str());
    }

    // Split off the (numerical) kernel of the pencil. A finite slope needs
    // the skew part to vanish on it.
    std::vector<Index> range_idx;
    for (Index i = 0; i < eigs.size(); ++i)
        if (eigs(i) > kernel_tol) range_idx.push_back(i);

    const Index n = form.dim();
    const Index m = static_cast<Index>(range_idx.size());
    if (m < n && skew_scale > 0.0) {
        for (Index i = 0; i < n; ++i) {
            if (eigs(i) > kernel_tol) continue;
            Vector k = es.eigenvectors().col(i);
            if ((skew * k).norm() > tol.psd_rel * std::max(skew_scale, 1e-300) * std::sqrt(double(n))) {
                throw Error(Errc::infinite_semi_angle,
                            "skew part does not vanish on the kernel of the real-part pencil");
            }
        }
    }
    if (m == 0) return {gamma, 0.0, Vector()};

    Matrix basis(n, m);
    Eigen::VectorXd restricted_eigs(m);
    for (Index j = 0; j < m; ++j) {
        basis.col(j) = es.eigenvectors().col(range_idx[static_cast<std::size_t>(j)]);
        restricted_eigs(j) = eigs(range_idx[static_cast<std::size_t>(j)]);
    }
    Matrix restricted_base = restricted_eigs.asDiagonal().toDenseMatrix().cast<Complex>();
    Matrix restricted_skew = basis.adjoint() * skew * basis;
    restricted_skew = symmetrized(restricted_skew);

    double slope = 0.0;
    Vector witness;
    for (int sign : {-1, +1}) {
        Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> ges(double(sign) * restricted_skew,
                                                             restricted_base);
        require(ges.info() == Eigen::Success, Errc::singular_gram, "semiangle eigensolve failed");
        const Index top = m - 1;
        if (ges.eigenvalues()(top) > slope) {
            slope = ges.eigenvalues()(top);
            witness = basis * ges.eigenvectors().col(top);
        }
    }
    if (witness.size() > 0) {
        const double h_norm = embedding.image_norm(witness);
        if (h_norm > 0.0) witness /= h_norm;
    }
    return {gamma, std::max(slope, 0.0), std::move(witness)};
}

double form_vertex(const Form& form, const Embedding& embedding) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(form.herm_re(),
                                                        embedding.pullback_gram(),
                                                        Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    require(es.info() == Eigen::Success, Errc::singular_gram, "vertex eigensolve failed");
    return es.eigenvalues()(0);
}

double form_norm(const Form& form, const Embedding& embedding, double gamma, const Vector& u,
                 const Tolerances& tol) {
    const Complex quad = form.quad(u);
    const double h_norm = embedding.image_norm(u);
    const double sq = quad.real() + (1.0 - gamma) * h_norm * h_norm;
    const double scale = std::abs(quad.real()) + std::abs(1.0 - gamma) * h_norm * h_norm;
    if (sq < -tol.psd_rel * std::max(scale, 1.0)) {
        std::ostringstream msg;
        msg << "squared form norm " << sq << " negative; vertex " << gamma << " is not certified";
        throw Error(Errc::negative_under_root, msg.str());
    }
    return std::sqrt(std::max(0.0, sq));
}

NormEquivalence norm_equivalence_check(const Form& form_a0, const Form& form_az,
                                       const Embedding& embedding, const Tolerances& tol) {
    require(form_a0.dim() == form_az.dim() && form_a0.dim() == embedding.dim(),
            Errc::dimension_mismatch, "forms and embedding dimensions disagree");

    for (const Form* f : {&form_a0, &form_az}) {
        Matrix re = f->herm_re();
        Eigen::SelfAdjointEigenSolver<Matrix> es(re, Eigen::EigenvaluesOnly);
        const double scale = spectral_scale(es.eigenvalues());
        if (es.eigenvalues()(0) < -tol.psd_rel * std::max(scale, 1e-300)) {
            std::ostringstream msg;
            msg << "form is not sectorial with vertex 0 (real-part eigenvalue "
                << es.eigenvalues()(0) << ")";
            throw Error(Errc::vertex_not_zero, msg.str());
        }
    }

    const Matrix& pulled = embedding.pullback_gram();
    Matrix n0 = form_a0.herm_re() + pulled;
    Matrix nz = form_az.herm_re() + pulled;
    n0 = symmetrized(n0);
    nz = symmetrized(nz);

    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(nz, n0,
                                                        Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    require(es.info() == Eigen::Success, Errc::singular_gram,
            "norm-equivalence eigensolve failed");
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    const bool ok = lo >= 0.5 - tol.norm_equiv_slack && hi <= 1.5 + tol.norm_equiv_slack;
    return {ok, lo, hi};
}

std::vector<Complex> numerical_range_sample(const Form& form, const Embedding& embedding,
                                            int count, std::uint64_t seed) {
    require(count >= 1, Errc::validation_error, "sample count must be at least 1");
    const Index n = form.dim();
    Rng root(seed);
    auto points = par::indexed_map(static_cast<std::size_t>(count), [&](std::size_t i) {
        Rng rng = root.fork(i);
        Vector u = rng.gaussian_vector(n);
        double h_sq = 0.0;
        do {
            const double h_norm = embedding.image_norm(u);
            h_sq = h_norm * h_norm;
            if (h_sq > 1e-200) break;
            u = rng.gaussian_vector(n);
        } while (true);
        return form.quad(u) / h_sq;
    });
    return points;
}

}  // namespace holoform
