// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoform/errors.hpp"
#include "holoform/types.hpp"

namespace holoform {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::not_hermitian: return "NotHermitian";
        case Errc::not_positive_definite: return "NotPositiveDefinite";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::singular_gram: return "SingularGram";
        case Errc::not_coercive: return "NotCoercive";
        case Errc::solve_failed: return "SolveFailed";
        case Errc::outside_domain: return "OutsideDomain";
        case Errc::vertex_too_large: return "VertexTooLarge";
        case Errc::infinite_semi_angle: return "InfiniteSemiAngle";
        case Errc::negative_under_root: return "NegativeUnderRoot";
        case Errc::vertex_not_zero: return "VertexNotZero";
        case Errc::not_normalized: return "NotNormalized";
        case Errc::degenerate_family: return "DegenerateFamily";
        case Errc::lambda_in_spectrum: return "LambdaInSpectrum";
        case Errc::node_spectrum_hit: return "NodeSpectrumHit";
        case Errc::evaluation_failure: return "EvaluationFailure";
        case Errc::singular_step: return "SingularStep";
        case Errc::non_positive_lambda: return "NonPositiveLambda";
        case Errc::uniform_bound_unverified: return "UniformBoundUnverified";
        case Errc::sector_too_wide: return "SectorTooWide";
        case Errc::bound_violated: return "BoundViolated";
        case Errc::unknown_demo: return "UnknownDemo";
        case Errc::parse_error: return "ParseError";
        case Errc::schema_error: return "SchemaError";
        case Errc::validation_error: return "ValidationError";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

void Tolerances::set(const std::string& key, double value) {
    const auto& table = fields();
    auto it = table.find(key);
    require(it != table.end(), Errc::schema_error, "unknown tolerance key '" + key + "'");
    this->*(it->second) = value;
}

void Tolerances::scale(double factor) {
    for (const auto& [name, member] : fields()) {
        if (name == "eq6_ratio_lo" || name == "eq6_ratio_hi") continue;  // ratio window, not a slack
        this->*member *= factor;
    }
}

const std::map<std::string, double Tolerances::*>& Tolerances::fields() {
    static const std::map<std::string, double Tolerances::*> table = {
        {"hermitian_rel", &Tolerances::hermitian_rel},
        {"pd_floor", &Tolerances::pd_floor},
        {"invertibility_rel", &Tolerances::invertibility_rel},
        {"solve_residual_rel", &Tolerances::solve_residual_rel},
        {"inverse_identity_rel", &Tolerances::inverse_identity_rel},
        {"defining_relation", &Tolerances::defining_relation},
        {"bound_slack", &Tolerances::bound_slack},
        {"psd_rel", &Tolerances::psd_rel},
        {"vertex_match", &Tolerances::vertex_match},
        {"sample_slack", &Tolerances::sample_slack},
        {"slope_chain_slack", &Tolerances::slope_chain_slack},
        {"norm_equiv_slack", &Tolerances::norm_equiv_slack},
        {"bisect_rel", &Tolerances::bisect_rel},
        {"holo_residual", &Tolerances::holo_residual},
        {"deriv_gap_rel", &Tolerances::deriv_gap_rel},
        {"sg_residual", &Tolerances::sg_residual},
        {"growth_slack", &Tolerances::growth_slack},
        {"eq5_slack", &Tolerances::eq5_slack},
        {"eq6_ratio_lo", &Tolerances::eq6_ratio_lo},
        {"eq6_ratio_hi", &Tolerances::eq6_ratio_hi},
        {"noise_floor", &Tolerances::noise_floor},
        {"spectrum_rel", &Tolerances::spectrum_rel},
        {"theta_gate", &Tolerances::theta_gate},
        {"snapshot_identity", &Tolerances::snapshot_identity},
        {"semigroup_law", &Tolerances::semigroup_law},
    };
    return table;
}

}  // namespace holoform
