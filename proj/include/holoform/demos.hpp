// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "holoform/scenario.hpp"

namespace holoform {

/// Names of the built-in demo scenarios, in listing order.
const std::vector<std::string>& demo_names();

/// Fully specified demo scenario; UnknownDemo for anything else.
///
/// Expected outcomes:
///   affine-hermitian  every requested check passes (exit 0)
///   schrodinger-1d    every requested check passes (exit 0)
///   rotated-sector    remark_a fails with a growth-bound violation (exit 1)
///   pole-at-r0        resolvent_holo fails beyond the pole radius; the
///                     semigroup checks skip on the failed prerequisite (exit 1)
///   jordan-nonnormal  every requested check passes; the inverse-norm bound
///                     is strict, not tight (exit 0)
Scenario builtin_demo(const std::string& name);

}  // namespace holoform
