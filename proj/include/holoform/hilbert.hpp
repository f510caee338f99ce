// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <utility>

#include "holoform/errors.hpp"
#include "holoform/types.hpp"

namespace holoform {

/// Finite-dimensional complex Hilbert space with inner product
/// <x, y> = y^* G x (linear in the first slot, conjugate-linear in the
/// second). G is validated Hermitian positive definite at construction.
class HilbertSpace {
  public:
    static std::shared_ptr<const HilbertSpace> make(Matrix gram, const Tolerances& tol = {});

    Index dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    double smallest_eigenvalue() const { return smallest_eig_; }

    Complex inner(const Vector& x, const Vector& y) const;
    double norm(const Vector& x) const;

    /// G^{-1} rhs via the cached Cholesky factor.
    Vector gram_solve(const Vector& rhs) const { return llt_.solve(rhs); }
    Matrix gram_solve(const Matrix& rhs) const { return llt_.solve(rhs); }
    const Eigen::LLT<Matrix>& cholesky() const { return llt_; }

  private:
    HilbertSpace(Matrix gram, double smallest_eig);

    Matrix gram_;
    double smallest_eig_;
    Eigen::LLT<Matrix> llt_;
};

using SpacePtr = std::shared_ptr<const HilbertSpace>;

/// Convenience: the standard C^n with identity Gram.
SpacePtr standard_space(Index dim);

/// (m + m^*) / 2 into fresh storage; safe to assign back onto m.
inline Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

/// One side of an operator-norm computation: a space or its anti-dual.
struct SpaceRef {
    SpacePtr space;
    bool is_dual = false;
};
inline SpaceRef primal(SpacePtr s) { return {std::move(s), false}; }
inline SpaceRef antidual(SpacePtr s) { return {std::move(s), true}; }

/// Element of the anti-dual V*: the pairing is <f, v> = v^* coeffs
/// (linear in f, conjugate-linear in v).
struct DualVector {
    SpacePtr space;  // the V whose anti-dual this lives in
    Vector coeffs;
};

Complex dual_pair(const DualVector& f, const Vector& v);

/// ||f||_{V*} = sqrt(c^* G^{-1} c), the exact sup of |<f,v>| / ||v||_V.
double dual_norm(const DualVector& f);

/// Exact operator norm of `map` between spaces or anti-duals, via the
/// generalized Hermitian eigenproblem T^* P T x = lambda S x, with P and S
/// the metric of each side (G for a space, G^{-1} for its anti-dual).
double op_norm(const Matrix& map, const SpaceRef& from, const SpaceRef& to);

/// Sesquilinear form a(u, v) = v^* M u on a space V; a(u) means a(u, u).
/// Re a and Im a are the quadratic forms of the Hermitian and skew parts.
class Form {
  public:
    Form(SpacePtr space, Matrix mat);

    const SpacePtr& space() const { return space_; }
    const Matrix& mat() const { return mat_; }
    Index dim() const { return mat_.rows(); }

    Complex operator()(const Vector& u, const Vector& v) const;
    Complex quad(const Vector& u) const { return (*this)(u, u); }

    Matrix herm_re() const { return 0.5 * (mat_ + mat_.adjoint()); }
    Matrix herm_im() const { return (mat_ - mat_.adjoint()) / Complex(0.0, 2.0); }

  private:
    SpacePtr space_;
    Matrix mat_;
};

/// Invertible map j : V -> H. The finite-dimensional stand-in for an
/// injective embedding with dense range, so dims must agree and J must be
/// invertible. Caches the pulled-back H-metric J^* G_H J.
class Embedding {
  public:
    Embedding(SpacePtr domain, SpacePtr codomain, Matrix map, const Tolerances& tol = {});

    const SpacePtr& domain() const { return domain_; }
    const SpacePtr& codomain() const { return codomain_; }
    const Matrix& map() const { return map_; }
    Index dim() const { return map_.rows(); }

    Vector apply(const Vector& u) const;
    /// J^* G_H J: the H inner product expressed in V coordinates.
    const Matrix& pullback_gram() const { return pullback_; }
    /// ||j u||_H measured directly in V coordinates.
    double image_norm(const Vector& u) const;
    /// The bound c with ||j u||_H <= c ||u||_V (exact operator norm).
    double bound_c() const { return bound_c_; }
    double sigma_min() const { return sigma_min_; }

  private:
    SpacePtr domain_;
    SpacePtr codomain_;
    Matrix map_;
    Matrix pullback_;
    double bound_c_;
    double sigma_min_;
};

/// Identity embedding between two metrics on the same coordinate space.
Embedding identity_embedding(const SpacePtr& domain, const SpacePtr& codomain,
                             const Tolerances& tol = {});

}  // namespace holoform
