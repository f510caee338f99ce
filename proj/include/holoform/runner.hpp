// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "holoform/report.hpp"
#include "holoform/scenario.hpp"

namespace holoform {

/// Runs the requested checks in dependency order. Check failures are report
/// content; later checks skip, naming the failed prerequisite. Nothing here
/// throws for a failing inequality, only for broken inputs.
Report run_scenario(const Scenario& scenario, double tol_scale = 1.0);

}  // namespace holoform
