// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/random_gen.hpp"

#include <Eigen/Eigenvalues>

#include "holoform/hilbert.hpp"

namespace holoform::gen {

Matrix random_pd(Rng& rng, Index n) {
    Matrix w = rng.gaussian_matrix(n, n);
    Matrix g = w * w.adjoint() / double(n) + 0.5 * Matrix::Identity(n, n);
    return 0.5 * (g + g.adjoint());
}

Matrix random_hermitian(Rng& rng, Index n) {
    Matrix w = rng.gaussian_matrix(n, n);
    return 0.5 * (w + w.adjoint());
}

Matrix random_invertible(Rng& rng, Index n) {
    Matrix w = rng.gaussian_matrix(n, n);
    return w + Complex(1.2 * w.norm(), 0.0) * Matrix::Identity(n, n);
}

Matrix random_coercive(Rng& rng, const Matrix& gram_v, bool hermitian) {
    const Index n = gram_v.rows();
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram_v, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues()(0);

    Matrix w = rng.gaussian_matrix(n, n);
    if (hermitian) w = symmetrized(w);
    // Frobenius dominates the spectral norm, so this keeps the Hermitian
    // part of the perturbation below 0.4 * lambda_min(G).
    w *= 0.4 * lambda_min / w.norm();
    return gram_v + w;
}

}  // namespace holoform::gen
