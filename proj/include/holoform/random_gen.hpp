// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "holoform/rng.hpp"

namespace holoform::gen {

/// Hermitian positive definite with eigenvalues in roughly [0.5, 5].
Matrix random_pd(Rng& rng, Index n);

/// Random Hermitian matrix (gaussian entries, symmetrized).
Matrix random_hermitian(Rng& rng, Index n);

/// Invertible with moderate condition number (gaussian plus diagonal shift).
Matrix random_invertible(Rng& rng, Index n);

/// Coercive against the given V Gram: G plus a perturbation whose Hermitian
/// part stays below 0.4 * lambda_min(G). Hermitian variant keeps only the
/// Hermitian part of the perturbation.
Matrix random_coercive(Rng& rng, const Matrix& gram_v, bool hermitian);

}  // namespace holoform::gen
