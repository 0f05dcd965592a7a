#pragma once

#include <string>

#include "squarefold/invariants.hpp"
#include "squarefold/lattice.hpp"

namespace squarefold::hyperbolicity {

using invariants::ProjectionInvariants;
using lattice::CurveProfile;
using lattice::TriState;

enum class Subject { projection_to_P3, symmetric_square, symmetric_power, cartesian_square };

enum class NormalizationClass { C_hyperbolic, super_Liouville, unknown };

const char* to_string(Subject s);
const char* to_string(NormalizationClass n);

struct HyperbolicityVerdict {
    Subject subject = Subject::projection_to_P3;
    TriState verdict = TriState::unknown;
    NormalizationClass normalization_class = NormalizationClass::unknown;
    std::string provenance;
};

/// A generic projection to P^3 of a hyperbolic smooth surface is
/// hyperbolic iff its double curve is, i.e. iff the double-curve genus is
/// at least 2.
HyperbolicityVerdict projection_hyperbolic(const ProjectionInvariants& pi,
                                           bool source_hyperbolic);

/// The symmetric square of a genus >= 3 curve is hyperbolic iff the curve
/// is neither hyperelliptic nor bielliptic; genus 2 symmetric squares are
/// never hyperbolic.
HyperbolicityVerdict symmetric_square_hyperbolic(const CurveProfile& profile);

/// The d-th symmetric power: never hyperbolic once 2d >= g+2 (a pencil of
/// degree d exists), hyperbolic for 2d < g+2 and generic moduli.
HyperbolicityVerdict symmetric_power_hyperbolic(long long g, long long d, bool generic);

struct CorrespondenceCurveData {
    long long gamma_sq = 0;         // always 1 - g
    long long gamma_dot_delta = 0;  // ramification count 2 + 2g - 4 g_R
    bool picard_consequence = false;  // Picard number of C_2 at least 3
};

/// Numerical data of the curve in the symmetric square induced by a degree-2
/// correspondence over a curve of genus g_R.
CorrespondenceCurveData correspondence_curve_data(long long g, long long g_R);

}  // namespace squarefold::hyperbolicity
