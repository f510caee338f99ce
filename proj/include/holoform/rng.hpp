// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

#include "holoform/types.hpp"

namespace holoform {

/// Hand-rolled splitmix64 generator. Reports must be byte-identical across
/// runs and thread counts, so we do not rely on std:: distribution sequences.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (one fresh pair per call, cosine leg).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Complex standard normal, E|z|^2 = 1.
    Complex cnormal() {
        double re = normal();
        double im = normal();
        return Complex(re, im) * 0.7071067811865475244;
    }

    Vector gaussian_vector(Index n) {
        Vector v(n);
        for (Index i = 0; i < n; ++i) v(i) = cnormal();
        return v;
    }

    Matrix gaussian_matrix(Index rows, Index cols) {
        Matrix m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) m(i, j) = cnormal();
        return m;
    }

    /// A derived generator that is stable under parallel index sweeps.
    Rng fork(std::uint64_t index) const {
        Rng child(state_ ^ (0x632be59bd9b4e019ull * (index + 1)));
        child.next();
        return child;
    }

  private:
    std::uint64_t state_;
};

}  // namespace holoform
