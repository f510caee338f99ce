// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/demos.hpp"

#include <cmath>
#include <numbers>

#include "holoform/errors.hpp"
#include "holoform/random_gen.hpp"

namespace holoform {

namespace {

/// dim 6, M(z) = M0 + z B with M0 Hermitian PD over random seeded Grams and
/// embedding; the full check set at the default tolerances.
Scenario demo_affine_hermitian() {
    Scenario s;
    s.name = "affine-hermitian";
    s.seed = 1063;
    s.dim = 6;
    Rng rng(s.seed);
    s.gram_v = gen::random_pd(rng, s.dim);
    s.gram_h = gen::random_pd(rng, s.dim);
    s.embedding = gen::random_invertible(rng, s.dim);
    Matrix m0 = gen::random_pd(rng, s.dim);
    Matrix b = rng.gaussian_matrix(s.dim, s.dim);
    b *= 0.25 * m0.norm() / b.norm();
    s.coeffs = {m0, b};
    s.domain_radius = 50.0;
    s.checks = all_checks();
    return s;
}

/// Finite-difference Dirichlet strings: a_z(u, v) = sum (Du)(conj Dv) h
/// + z sum q u conj(v) h with a complex bounded potential q, on a 100-point
/// grid. V carries the discrete first-order norm, H the weighted ell^2 norm.
Scenario demo_schrodinger_1d() {
    Scenario s;
    s.name = "schrodinger-1d";
    s.seed = 4211;
    const Index n = 100;
    s.dim = n;
    const double h = 1.0 / double(n + 1);

    Matrix stiffness = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        stiffness(i, i) = 2.0 / h;
        if (i + 1 < n) {
            stiffness(i, i + 1) = -1.0 / h;
            stiffness(i + 1, i) = -1.0 / h;
        }
    }
    Matrix mass = h * Matrix::Identity(n, n);

    s.gram_h = mass;
    s.gram_v = stiffness + mass;
    s.embedding = Matrix::Identity(n, n);

    Rng rng(s.seed);
    Matrix potential = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        potential(i, i) = h * Complex(rng.uniform(-3.5, 3.5), rng.uniform(-3.5, 3.5));

    s.coeffs = {stiffness, potential};
    s.domain_radius = 10.0;
    s.checks = {CheckKind::laxmilgram,     CheckKind::sector, CheckKind::uniform_sector,
                CheckKind::norm_equiv,     CheckKind::resolvent_holo,
                CheckKind::thm4a,          CheckKind::thm4b};
    return s;
}

/// dim 2 constant family rotated into the complex plane so the numerical
/// range hugs a ray at 0.7 rad. theta_prime reaches past the true sector of
/// the semigroup, so the growth bound must be violated on the tau grid.
Scenario demo_rotated_sector() {
    Scenario s;
    s.name = "rotated-sector";
    s.seed = 97;
    s.dim = 2;
    s.gram_v = Matrix::Identity(2, 2);
    s.gram_h = Matrix::Identity(2, 2);
    s.embedding = Matrix::Identity(2, 2);

    const double phi = 0.7;
    Matrix m0 = Matrix::Zero(2, 2);
    m0(0, 0) = std::polar(1.0, phi);
    m0(1, 1) = std::polar(2.0, phi);
    s.coeffs = {m0};
    s.domain_radius = 1.0;
    s.shift = 0.0;  // keep the rotation: no vertex normalization
    s.checks = {CheckKind::laxmilgram, CheckKind::sector, CheckKind::remark_a};
    s.semigroup.theta_prime = std::numbers::pi / 2.0 - phi + 0.15;
    s.semigroup.tau_radius = 2.0;
    s.holo.radius = 0.25;
    return s;
}

/// M(z) = (1 - z / r0) I loses invertibility at z = r0 = 0.4. The scenario
/// pins the holomorphy-test radius at 0.5 > r0, past the certified radius,
/// so the mean-value test must fail and the semigroup checks skip.
Scenario demo_pole_at_r0() {
    Scenario s;
    s.name = "pole-at-r0";
    s.seed = 7;
    s.dim = 3;
    s.gram_v = Matrix::Identity(3, 3);
    s.gram_h = Matrix::Identity(3, 3);
    s.embedding = Matrix::Identity(3, 3);
    const double r0 = 0.4;
    s.coeffs = {Matrix::Identity(3, 3), (-1.0 / r0) * Matrix::Identity(3, 3)};
    s.domain_radius = 1.0;
    s.checks = {CheckKind::laxmilgram, CheckKind::uniform_sector, CheckKind::resolvent_holo,
                CheckKind::thm4a, CheckKind::thm4b};
    s.holo.radius = 0.5;
    return s;
}

/// dim 4 Jordan-style non-normal constant family on the standard spaces:
/// the inverse-norm bound is strict and the power bounds still hold after
/// normalization.
Scenario demo_jordan_nonnormal() {
    Scenario s;
    s.name = "jordan-nonnormal";
    s.seed = 311;
    s.dim = 4;
    s.gram_v = Matrix::Identity(4, 4);
    s.gram_h = Matrix::Identity(4, 4);
    s.embedding = Matrix::Identity(4, 4);
    Matrix m0 = Matrix::Identity(4, 4);
    for (Index i = 0; i + 1 < 4; ++i) m0(i, i + 1) = 0.8;
    s.coeffs = {m0};
    s.domain_radius = 1.0;
    s.checks = {CheckKind::laxmilgram, CheckKind::sector, CheckKind::eq5, CheckKind::eq6};
    return s;
}

}  // namespace

const std::vector<std::string>& demo_names() {
    static const std::vector<std::string> names = {
        "affine-hermitian", "schrodinger-1d", "rotated-sector", "pole-at-r0",
        "jordan-nonnormal",
    };
    return names;
}

Scenario builtin_demo(const std::string& name) {
    if (name == "affine-hermitian") return demo_affine_hermitian();
    if (name == "schrodinger-1d") return demo_schrodinger_1d();
    if (name == "rotated-sector") return demo_rotated_sector();
    if (name == "pole-at-r0") return demo_pole_at_r0();
    if (name == "jordan-nonnormal") return demo_jordan_nonnormal();
    fail(Errc::unknown_demo, "no demo named '" + name + "'");
}

}  // namespace holoform
