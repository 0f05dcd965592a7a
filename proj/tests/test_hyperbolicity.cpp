#include <doctest.h>

#include "squarefold/hyperbolicity.hpp"
#include "squarefold/invariants.hpp"

using namespace squarefold;
using namespace squarefold::hyperbolicity;
using lattice::CurveProfile;
using lattice::SymmetricClass;

TEST_CASE("projection verdicts follow the double-curve genus") {
    invariants::ProjectionInvariants pi;
    pi.g_dcurve = 142;
    CHECK(projection_hyperbolic(pi, true).verdict == TriState::yes);
    CHECK(projection_hyperbolic(pi, true).normalization_class ==
          NormalizationClass::C_hyperbolic);
    CHECK(projection_hyperbolic(pi, false).verdict == TriState::unknown);
    pi.g_dcurve = 1;
    CHECK(projection_hyperbolic(pi, true).verdict == TriState::no);
    pi.g_dcurve = 0;
    CHECK(projection_hyperbolic(pi, false).verdict == TriState::no);
}

TEST_CASE("symmetric square hyperbolicity") {
    CHECK(symmetric_square_hyperbolic(CurveProfile::make(2)).verdict == TriState::no);
    CHECK(symmetric_square_hyperbolic(CurveProfile::make(3, true)).verdict ==
          TriState::yes);
    CHECK(symmetric_square_hyperbolic(
              CurveProfile::make(3, false, TriState::yes)).verdict == TriState::no);
    CHECK(symmetric_square_hyperbolic(
              CurveProfile::make(3, false, TriState::no, TriState::yes)).verdict ==
          TriState::no);
    CHECK(symmetric_square_hyperbolic(CurveProfile::make(5)).verdict ==
          TriState::unknown);
    CHECK(symmetric_square_hyperbolic(CurveProfile::make(5, true)).normalization_class ==
          NormalizationClass::super_Liouville);
}

TEST_CASE("symmetric powers") {
    CHECK(symmetric_power_hyperbolic(8, 5, true).verdict == TriState::no);   // 2d = g+2
    CHECK(symmetric_power_hyperbolic(9, 5, true).verdict == TriState::yes);  // 2d < g+2
    CHECK(symmetric_power_hyperbolic(9, 5, false).verdict == TriState::unknown);
    CHECK(symmetric_power_hyperbolic(9, 5, true).normalization_class ==
          NormalizationClass::super_Liouville);
    CHECK_THROWS_AS(symmetric_power_hyperbolic(1, 1, true), std::domain_error);
}

TEST_CASE("correspondence curves in the symmetric square") {
    const auto c = correspondence_curve_data(3, 1);
    CHECK(c.gamma_sq == -2);
    CHECK(c.gamma_dot_delta == 4);
    CHECK(c.picard_consequence);
    const auto u = correspondence_curve_data(5, 0);
    CHECK(u.gamma_sq == -4);
    CHECK(u.gamma_dot_delta == 12);
    CHECK_FALSE(u.picard_consequence);
    CHECK_THROWS_AS(correspondence_curve_data(3, 3), std::domain_error);
}

TEST_CASE("end-to-end: the published hyperbolic projection") {
    const auto pi = invariants::symmetric_profile(3, SymmetricClass{Rat(4), Rat(0), 3});
    const auto src = symmetric_square_hyperbolic(CurveProfile::make(3, true));
    const auto v = projection_hyperbolic(pi, src.verdict == TriState::yes);
    CHECK(v.verdict == TriState::yes);
}
