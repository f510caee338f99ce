// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "holoform/hilbert.hpp"
#include "holoform/laxmilgram.hpp"
#include "holoform/random_gen.hpp"
#include "holoform/rng.hpp"

namespace holoform::test {

/// Hand-rolled Cholesky positive-definiteness probe (no library call), the
/// backbone of the bisection eigenvalue oracle below.
inline bool chol_pd(Matrix a) {
    const Index n = a.rows();
    for (Index k = 0; k < n; ++k) {
        const double diag = a(k, k).real();
        if (!(diag > 0.0)) return false;
        const double root = std::sqrt(diag);
        for (Index i = k + 1; i < n; ++i) a(i, k) /= root;
        for (Index j = k + 1; j < n; ++j)
            for (Index i = j; i < n; ++i) a(i, j) -= a(i, k) * std::conj(a(j, k));
    }
    return true;
}

/// Smallest eigenvalue of a Hermitian matrix by bisection on the Cholesky
/// test; independent of any eigensolver.
inline double bisect_smallest_eig(const Matrix& a) {
    const double scale = a.cwiseAbs().maxCoeff() * double(a.rows()) + 1.0;
    double lo = -scale, hi = scale;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * scale; ++iter) {
        const double mid = 0.5 * (lo + hi);
        // A - mid I is PD  <=>  smallest eigenvalue > mid
        if (chol_pd(a - mid * Matrix::Identity(a.rows(), a.cols())))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Monte-Carlo lower estimate of sup ||T u||_to / ||u||_from over random u,
/// with caller-supplied norms.
template <typename FromNorm, typename ToNorm>
double mc_sup_ratio(const Matrix& t, int samples, std::uint64_t seed, FromNorm&& from_norm,
                    ToNorm&& to_norm) {
    Rng rng(seed);
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        Vector u = rng.gaussian_vector(t.cols());
        const double denom = from_norm(u);
        if (denom <= 0.0) continue;
        best = std::max(best, to_norm(Vector(t * u)) / denom);
    }
    return best;
}

/// exp(-t a) through an eigendecomposition; only valid for diagonalizable
/// matrices with a well-conditioned eigenbasis.
inline Matrix expm_eig_oracle(const Matrix& a, double t, double* eigcond = nullptr) {
    Eigen::ComplexEigenSolver<Matrix> es(a);
    const Matrix& v = es.eigenvectors();
    Eigen::JacobiSVD<Matrix> svd(v);
    const double cond = svd.singularValues()(0) /
                        svd.singularValues()(svd.singularValues().size() - 1);
    if (eigcond != nullptr) *eigcond = cond;
    Vector d(es.eigenvalues().size());
    for (Index i = 0; i < d.size(); ++i) d(i) = std::exp(-t * es.eigenvalues()(i));
    return v * d.asDiagonal() * v.inverse();
}

struct Instance {
    SpacePtr space_v;
    SpacePtr space_h;
    Embedding embedding;
    Form form;
};

/// A seeded coercive instance: random PD Grams, random invertible embedding,
/// coercive form matrix (Hermitian on request).
inline Instance random_instance(std::uint64_t seed, Index dim, bool hermitian) {
    Rng rng(seed);
    auto v = HilbertSpace::make(gen::random_pd(rng, dim));
    auto h = HilbertSpace::make(gen::random_pd(rng, dim));
    Embedding embed(v, h, gen::random_invertible(rng, dim));
    Form form(v, gen::random_coercive(rng, v->gram(), hermitian));
    return {v, h, std::move(embed), std::move(form)};
}

/// Column-wise construction of the inverse of the associated operator: for
/// each basis vector y of H, solve the variational problem with right-hand
/// side <y, j(.)>_H and record j u as a column.
inline Matrix columnwise_inverse_oracle(const Form& form, const Embedding& embed) {
    const Index n = form.dim();
    Matrix inv(n, n);
    for (Index col = 0; col < n; ++col) {
        Vector y = Vector::Zero(n);
        y(col) = 1.0;
        const DualVector rhs = canonical_injection(embed, y);
        const Vector u = laxmilgram_solve(form, rhs);
        inv.col(col) = embed.apply(u);
    }
    return inv;
}

}  // namespace holoform::test
