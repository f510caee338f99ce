// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "holoform/hilbert.hpp"

namespace holoform {

/// Best coercivity constant alpha with Re a(u) >= alpha ||u||_V^2, together
/// with a unit witness attaining it (the smallest generalized eigenpair of
/// the Hermitian part against the V Gram).
struct CoercivityCertificate {
    double alpha = 0.0;
    Vector witness;
};

/// Throws NotCoercive (with the nonpositive eigenvalue and witness in the
/// message) when the form has no positive coercivity constant.
CoercivityCertificate coercivity_constant(const Form& form);

/// Solves a(u, .) = <f, .>, i.e. the coordinate system M u = c.
Vector laxmilgram_solve(const Form& form, const DualVector& f, const Tolerances& tol = {});

/// Exact V* -> V operator norm of the inverse of u |-> a(u, .).
/// Always <= 1/alpha for coercive forms; equal for Hermitian ones.
double laxmilgram_inverse_norm(const Form& form);

/// k : H -> V*, y |-> <y, j(.)>_H. Coefficients are J^* G_H y.
DualVector canonical_injection(const Embedding& embedding, const Vector& y);

/// Operator in H induced by a coercive form and an embedding. Built from the
/// inverse composition J M^{-1} J^* G_H, with op_mat its inverse; the
/// defining relation M = J^* G_H A J is verified at construction.
class AssociatedOperator {
  public:
    static AssociatedOperator build(const Form& form, const Embedding& embedding,
                                    const Tolerances& tol = {});

    const Matrix& op() const { return op_mat_; }
    const Matrix& inv() const { return inv_mat_; }
    const SpacePtr& space() const { return embedding_.codomain(); }
    const Form& form() const { return form_; }
    const Embedding& embedding() const { return embedding_; }
    double alpha() const { return alpha_; }

  private:
    AssociatedOperator(Form form, Embedding embedding, Matrix op_mat, Matrix inv_mat,
                       double alpha);

    Form form_;
    Embedding embedding_;
    Matrix op_mat_;
    Matrix inv_mat_;
    double alpha_;
};

/// Exact min of Re<Ax, x>_H / ||x||_H^2: the smallest generalized eigenvalue
/// of the Hermitian part of G_H A against G_H. Positive for operators built
/// from coercive forms, with margin at least alpha / c^2.
double accretivity_margin(const AssociatedOperator& op);
double accretivity_margin(const Matrix& op_mat, const HilbertSpace& space);

}  // namespace holoform
