// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "holoform/hilbert.hpp"

namespace holoform {

/// A certified sector for the numerical range of a form measured against the
/// H-metric pulled back through the embedding: |Im a(u)| <= slope * (Re a(u)
/// - gamma ||j u||_H^2) for all u. Certification is by Hermitian-pencil PSD
/// tests, never by sampling.
struct SectorEstimate {
    double gamma = 0.0;
    double slope = 0.0;
    Vector tight_witness;  // unit H-norm direction where the bound is active
};

struct SectorCheckResult {
    bool ok = false;
    double margin = 0.0;  // smallest pencil eigenvalue over both signs, / ||G||
};

/// True iff both pencils slope * (H_re - gamma G) -/+ H_im are PSD
/// (smallest eigenvalue >= -psd_rel * ||pencil||).
SectorCheckResult sector_check(const Form& form, const Embedding& embedding, double gamma,
                               double slope, const Tolerances& tol = {});

/// Minimal slope at the given vertex. Throws VertexTooLarge when
/// H_re - gamma G is not PSD and InfiniteSemiAngle when that pencil is
/// singular in a direction the skew part does not annihilate.
SectorEstimate min_semiangle(const Form& form, const Embedding& embedding, double gamma,
                             const Tolerances& tol = {});

/// The largest vertex for which the real-part pencil stays PSD:
/// the smallest generalized eigenvalue of H_re against the pulled-back Gram.
double form_vertex(const Form& form, const Embedding& embedding);

/// sqrt(Re a(u) + (1 - gamma) ||j u||_H^2); NegativeUnderRoot signals an
/// uncertified vertex.
double form_norm(const Form& form, const Embedding& embedding, double gamma, const Vector& u,
                 const Tolerances& tol = {});

struct NormEquivalence {
    bool ok = false;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
};

/// Exact extremal ratios of the squared vertex-zero form norms of two forms,
/// via the generalized eigenproblem on the norm-defining Hermitian matrices.
/// ok iff both ratios land in [1/2, 3/2] (with configured slack).
NormEquivalence norm_equivalence_check(const Form& form_a0, const Form& form_az,
                                       const Embedding& embedding, const Tolerances& tol = {});

/// Deterministic seeded sample of a(u) / ||j u||_H^2 over random nonzero u.
std::vector<Complex> numerical_range_sample(const Form& form, const Embedding& embedding,
                                            int count, std::uint64_t seed);

}  // namespace holoform
