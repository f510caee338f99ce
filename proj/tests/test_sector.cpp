// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "holoform/sector.hpp"

using namespace holoform;
using doctest::Approx;

namespace {

/// M = [[1, 1], [-1, 1]]: real part I, skew part with eigenvalues +/- 1.
Matrix rotated_2x2() {
    Matrix m(2, 2);
    m << Complex(1, 0), Complex(1, 0), Complex(-1, 0), Complex(1, 0);
    return m;
}

struct Setup {
    SpacePtr space;
    Embedding embed;
    Setup() : space(HilbertSpace::make(Matrix::Identity(2, 2))),
              embed(identity_embedding(space, space)) {}
};

}  // namespace

TEST_CASE("Hermitian semibounded forms have semi-angle zero at their vertex") {
    Setup s;
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 3.0;
    Form form(s.space, m);
    const double vertex = form_vertex(form, s.embed);
    CHECK(vertex == Approx(1.0));
    CHECK(sector_check(form, s.embed, vertex, 0.0).ok);
    CHECK(min_semiangle(form, s.embed, vertex - 0.25).slope == Approx(0.0));
}

TEST_CASE("the rotated 2x2 pencil is tight at slope one") {
    Setup s;
    Form form(s.space, rotated_2x2());
    const auto at_one = sector_check(form, s.embed, 0.0, 1.0);
    CHECK(at_one.ok);
    CHECK(at_one.margin == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK_FALSE(sector_check(form, s.embed, 0.0, 0.9).ok);
    CHECK(min_semiangle(form, s.embed, 0.0).slope == Approx(1.0));
}

TEST_CASE("certified sectors contain every sampled numerical-range point") {
    auto inst = test::random_instance(614, 4, false);
    const double gamma = form_vertex(inst.form, inst.embedding) - 0.1;
    const auto est = min_semiangle(inst.form, inst.embedding, gamma);
    REQUIRE(sector_check(inst.form, inst.embedding, gamma, est.slope).ok);
    for (Complex w : numerical_range_sample(inst.form, inst.embedding, 10000, 5)) {
        CHECK(std::abs(w.imag()) <= est.slope * (w.real() - gamma) + 1e-10);
    }
}

TEST_CASE("minimal slopes really are minimal") {
    auto inst = test::random_instance(615, 3, false);
    const double gamma = form_vertex(inst.form, inst.embedding) - 0.2;
    const auto est = min_semiangle(inst.form, inst.embedding, gamma);
    if (est.slope > 1e-6) {
        CHECK_FALSE(sector_check(inst.form, inst.embedding, gamma, est.slope - 1e-6).ok);
        // the witness activates the bound
        REQUIRE(est.tight_witness.size() == 3);
        const Complex q = inst.form.quad(est.tight_witness);
        const double h2 = std::pow(inst.embedding.image_norm(est.tight_witness), 2);
        CHECK(std::abs(q.imag()) ==
              Approx(est.slope * (q.real() - gamma * h2)).epsilon(1e-8));
    }
}

TEST_CASE("vertex beyond the pencil and skew kernel directions are rejected") {
    Setup s;
    CHECK_THROWS_AS((void)min_semiangle(Form(s.space, Matrix::Identity(2, 2)), s.embed, 2.0),
                    Error);

    // real part diag(1, 0) is singular where the skew part acts
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = Complex(0, 1);
    m(1, 0) = Complex(0, 1);
    try {
        min_semiangle(Form(s.space, m), s.embed, 0.0);
        FAIL("expected InfiniteSemiAngle");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::infinite_semi_angle);
    }
}

TEST_CASE("form norms: plug-in values and the defining formula") {
    Setup s;
    Form ident(s.space, Matrix::Identity(2, 2));
    Vector u = Vector::Unit(2, 0);
    CHECK(form_norm(ident, s.embed, 1.0, u) == Approx(1.0));
    CHECK(form_norm(ident, s.embed, 0.0, u) == Approx(std::sqrt(2.0)));

    auto inst = test::random_instance(616, 4, false);
    const double gamma = form_vertex(inst.form, inst.embedding);
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Vector w = rng.gaussian_vector(4);
        const double value = form_norm(inst.form, inst.embedding, gamma, w);
        const double h2 = std::pow(inst.embedding.image_norm(w), 2);
        const double expect = inst.form.quad(w).real() + (1.0 - gamma) * h2;
        CHECK(value * value == Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("form norms refuse an uncertified vertex") {
    Setup s;
    Form ident(s.space, Matrix::Identity(2, 2));
    Vector u = Vector::Unit(2, 0);
    try {
        form_norm(ident, s.embed, 5.0, u);  // 1 + (1 - 5) < 0 under the root
        FAIL("expected NegativeUnderRoot");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::negative_under_root);
    }
}

TEST_CASE("form norms grow with the real part under domination") {
    auto inst = test::random_instance(617, 3, false);
    Rng rng(9);
    Matrix bump = rng.gaussian_matrix(3, 3);
    bump = Matrix(bump * bump.adjoint());  // PSD addition to the real part
    Form bigger(inst.form.space(), inst.form.mat() + bump);
    for (int trial = 0; trial < 50; ++trial) {
        Vector u = rng.gaussian_vector(3);
        CHECK(form_norm(inst.form, inst.embedding, 0.0, u) <=
              form_norm(bigger, inst.embedding, 0.0, u) + 1e-12);
    }
}

TEST_CASE("norm equivalence ratios: identity, scaling, and the vertex gate") {
    Setup s;
    Form a0(s.space, Matrix::Identity(2, 2));
    const auto same = norm_equivalence_check(a0, a0, s.embed);
    CHECK(same.ok);
    CHECK(same.ratio_min == Approx(1.0));
    CHECK(same.ratio_max == Approx(1.0));

    // 3/2 scaling dilutes through the H-norm term: ratios strictly inside
    Form scaled(s.space, 1.5 * Matrix::Identity(2, 2));
    const auto eq = norm_equivalence_check(a0, scaled, s.embed);
    CHECK(eq.ok);
    CHECK(eq.ratio_max == Approx(1.25));
    CHECK(eq.ratio_max < 1.5);

    Matrix neg = Matrix::Identity(2, 2);
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS((void)norm_equivalence_check(a0, Form(s.space, neg), s.embed), Error);
}

TEST_CASE("numerical range samples: constants, hull membership, determinism") {
    Setup s;
    auto ones = numerical_range_sample(Form(s.space, Matrix::Identity(2, 2)), s.embed, 64, 3);
    for (Complex w : ones) CHECK(std::abs(w - Complex(1, 0)) < 1e-12);

    // normal matrix diag(1, i): the range is the segment between 1 and i
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = Complex(1, 0);
    m(1, 1) = Complex(0, 1);
    for (Complex w : numerical_range_sample(Form(s.space, m), s.embed, 4096, 12)) {
        CHECK(w.real() + w.imag() == Approx(1.0).epsilon(1e-10));
        CHECK(w.real() >= -1e-12);
        CHECK(w.real() <= 1.0 + 1e-12);
    }

    auto inst = test::random_instance(618, 5, false);
    auto run1 = numerical_range_sample(inst.form, inst.embedding, 512, 42);
    auto run2 = numerical_range_sample(inst.form, inst.embedding, 512, 42);
    REQUIRE(run1.size() == run2.size());
    for (std::size_t i = 0; i < run1.size(); ++i) CHECK(run1[i] == run2[i]);
}
