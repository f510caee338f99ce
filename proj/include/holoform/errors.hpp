// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace holoform {

enum class Errc {
    not_hermitian,
    not_positive_definite,
    dimension_mismatch,
    singular_gram,
    not_coercive,
    solve_failed,
    outside_domain,
    vertex_too_large,
    infinite_semi_angle,
    negative_under_root,
    vertex_not_zero,
    not_normalized,
    degenerate_family,
    lambda_in_spectrum,
    node_spectrum_hit,
    evaluation_failure,
    singular_step,
    non_positive_lambda,
    uniform_bound_unverified,
    sector_too_wide,
    bound_violated,
    unknown_demo,
    parse_error,
    schema_error,
    validation_error,
    io_error,
};

/// Returns the stable camel-case name of a code, e.g. "NotCoercive".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, Errc code, const std::string& message) {
    if (!ok) fail(code, message);
}

}  // namespace holoform
