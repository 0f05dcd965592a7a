#include "squarefold/hyperbolicity.hpp"

#include "squarefold/errors.hpp"

namespace squarefold::hyperbolicity {

const char* to_string(Subject s) {
    switch (s) {
        case Subject::projection_to_P3: return "projection_to_P3";
        case Subject::symmetric_square: return "symmetric_square";
        case Subject::symmetric_power: return "symmetric_power";
        default: return "cartesian_square";
    }
}

const char* to_string(NormalizationClass n) {
    switch (n) {
        case NormalizationClass::C_hyperbolic: return "C_hyperbolic";
        case NormalizationClass::super_Liouville: return "super_Liouville";
        default: return "unknown";
    }
}

HyperbolicityVerdict projection_hyperbolic(const ProjectionInvariants& pi,
                                           bool source_hyperbolic) {
    HyperbolicityVerdict v;
    v.subject = Subject::projection_to_P3;
    v.normalization_class = NormalizationClass::C_hyperbolic;
    if (pi.g_dcurve <= 1) {
        v.verdict = TriState::no;
        v.provenance = "double curve of genus <= 1 is not hyperbolic";
    } else if (source_hyperbolic) {
        v.verdict = TriState::yes;
        v.provenance = "hyperbolic source and double curve of genus >= 2";
    } else {
        v.verdict = TriState::unknown;
        v.provenance = "source hyperbolicity not asserted";
        v.normalization_class = NormalizationClass::unknown;
    }
    return v;
}

HyperbolicityVerdict symmetric_square_hyperbolic(const CurveProfile& profile) {
    HyperbolicityVerdict v;
    v.subject = Subject::symmetric_square;
    v.normalization_class = NormalizationClass::super_Liouville;
    if (profile.genus == 2) {
        v.verdict = TriState::no;
        v.provenance = "genus-2 symmetric square is a blown-up abelian surface";
        return v;
    }
    if (profile.hyperelliptic == TriState::yes) {
        v.verdict = TriState::no;
        v.provenance = "hyperelliptic curve: the symmetric square contains a rational curve";
    } else if (profile.bielliptic == TriState::yes) {
        v.verdict = TriState::no;
        v.provenance = "bielliptic curve: the symmetric square contains an elliptic curve";
    } else if (profile.hyperelliptic == TriState::no && profile.bielliptic == TriState::no) {
        v.verdict = TriState::yes;
        v.provenance = "neither hyperelliptic nor bielliptic";
    } else {
        v.verdict = TriState::unknown;
        v.provenance = "hyperelliptic or bielliptic status unknown";
    }
    return v;
}

HyperbolicityVerdict symmetric_power_hyperbolic(long long g, long long d, bool generic) {
    if (g < 2 || d < 1)
        throw std::domain_error("symmetric_power_hyperbolic: needs g >= 2, d >= 1");
    HyperbolicityVerdict v;
    v.subject = Subject::symmetric_power;
    v.normalization_class =
        d >= 2 ? NormalizationClass::super_Liouville : NormalizationClass::C_hyperbolic;
    if (2 * d >= g + 2) {
        v.verdict = TriState::no;
        v.provenance = "a degree-d pencil exists (Brill-Noether number >= 0)";
    } else if (generic) {
        v.verdict = TriState::yes;
        v.provenance = "generic curve with 2d < g+2";
    } else {
        v.verdict = TriState::unknown;
        v.provenance = "2d < g+2 but special moduli may carry a degree-d pencil";
    }
    return v;
}

CorrespondenceCurveData correspondence_curve_data(long long g, long long g_R) {
    if (g < 2 || g_R < 0)
        throw std::domain_error("correspondence_curve_data: needs g >= 2, g_R >= 0");
    const long long ram = 2 + 2 * g - 4 * g_R;
    if (ram < 0)
        throw std::domain_error(
            "correspondence_curve_data: negative ramification count (no such double cover)");
    return {1 - g, ram, g_R >= 1};
}

}  // namespace squarefold::hyperbolicity
