#include "squarefold/golden.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

#include "squarefold/cones.hpp"
#include "squarefold/hyperbolicity.hpp"
#include "squarefold/invariants.hpp"
#include "squarefold/search.hpp"

namespace squarefold::golden {

namespace {

using cones::Property;
using cones::Verdict;
using invariants::ProjectionInvariants;
using lattice::CartesianClass;
using lattice::CurveProfile;
using lattice::SymmetricClass;

void expect(GoldenOutcome& out, const std::string& check, const std::string& expected,
            const std::string& actual) {
    ++out.checks;
    if (expected != actual) out.mismatches.push_back({check, expected, actual});
}

void expect_ll(GoldenOutcome& out, const std::string& check, long long expected,
               long long actual) {
    expect(out, check, std::to_string(expected), std::to_string(actual));
}

std::string tuple_text(const ProjectionInvariants& pi) {
    std::ostringstream s;
    s << "(" << pi.n << ", " << pi.g_H << ", " << pi.d_dcurve << ", " << pi.g_dcurve
      << ", " << pi.pinch << ", " << pi.triple << ", " << pi.double_pts_P4 << ")";
    return s.str();
}

void check_projection_tables(GoldenOutcome& out) {
    out.citations.push_back(
        "projection profiles of the degree-50 genus-2 and degree-32 genus-3 "
        "square embeddings");
    const auto row2 =
        invariants::cartesian_profile(2, CartesianClass{Rat(5), Rat(5), Rat(0), 2});
    expect(out, "cartesian g=2 D_{5,5,0} profile",
           "(50, 36, 1140, 2449, 384, 15784, 948)", tuple_text(row2));
    const auto row3 =
        invariants::cartesian_profile(3, CartesianClass{Rat(4), Rat(4), Rat(0), 3});
    expect(out, "cartesian g=3 D_{4,4,0} profile",
           "(32, 33, 432, 1045, 336, 3280, 264)", tuple_text(row3));
}

void check_symmetric_triple(GoldenOutcome& out) {
    out.citations.push_back(
        "degree-16 embedding of the genus-3 symmetric square and the "
        "hyperbolicity of its generic projection");
    const auto pi = invariants::symmetric_profile(3, SymmetricClass{Rat(4), Rat(0), 3});
    expect_ll(out, "symmetric g=3 D'_{4,0} degree", 16, pi.n);
    expect_ll(out, "symmetric g=3 D'_{4,0} sectional genus", 15, pi.g_H);
    expect_ll(out, "symmetric g=3 D'_{4,0} double-curve genus", 142, pi.g_dcurve);
    const auto profile = CurveProfile::make(3, true);
    const auto source = hyperbolicity::symmetric_square_hyperbolic(profile);
    const auto proj = hyperbolicity::projection_hyperbolic(
        pi, source.verdict == lattice::TriState::yes);
    expect(out, "symmetric g=3 projection hyperbolic", "yes",
           lattice::to_string(proj.verdict));
}

void check_cone_boundaries(GoldenOutcome& out) {
    out.citations.push_back(
        "genus-2 positivity windows: nef up to 2|k| = a, ample below it, very "
        "ample up to 2|k| = a-3");
    for (long long a = 5; a <= 40; ++a) {
        for (long long k = -(a / 2 + 2); k <= a / 2 + 2; ++k) {
            const auto verdicts = cones::cone_status_cartesian_g2(a, Rat(k));
            const long long t = 2 * std::llabs(k);
            const char* nef = t <= a ? "yes" : "no";
            const char* ample = t <= a - 1 ? "yes" : "no";
            const char* va = t <= a - 3 ? "yes" : "no";
            const std::string tag =
                "g=2 D_{" + std::to_string(a) + "," + std::to_string(a) + "," +
                std::to_string(k) + "} ";
            expect(out, tag + "nef", nef,
                   cones::to_string(verdict_for(verdicts, Property::nef)));
            expect(out, tag + "ample", ample,
                   cones::to_string(verdict_for(verdicts, Property::ample)));
            expect(out, tag + "very_ample", va,
                   cones::to_string(verdict_for(verdicts, Property::very_ample)));
        }
    }
    const auto d221 = cones::cone_status_cartesian_g2(2, Rat(1));
    expect(out, "g=2 D_{2,2,1} nef", "yes",
           cones::to_string(verdict_for(d221, Property::nef)));
    expect(out, "g=2 D_{2,2,1} big", "yes",
           cones::to_string(verdict_for(d221, Property::big)));
    expect(out, "g=2 D_{2,2,1} ample", "no",
           cones::to_string(verdict_for(d221, Property::ample)));
    const auto b = cones::cone_status_cartesian_g3(10, 6);
    expect(out, "g=3 D_{10,10,6} quasi_effective", "yes",
           cones::to_string(verdict_for(b, Property::quasi_effective)));
    expect(out, "g=3 D_{10,10,6} nef", "no",
           cones::to_string(verdict_for(b, Property::nef)));
    const CartesianClass bcls{Rat(10), Rat(10), Rat(6), 3};
    expect(out, "g=3 B self-intersection", "-16",
           squarefold::to_string(lattice::self_intersection(bcls)));
}

void check_degree_searches(GoldenOutcome& out) {
    out.citations.push_back(
        "minimal degrees of projective embeddings of the square (genus 2..13) "
        "and of the symmetric square (genus 3, 4)");
    const std::array<std::array<long long, 2>, 3> cartesian_min = {
        {{2, 18}, {3, 20}, {4, 24}}};
    for (const auto& [g, n] : cartesian_min) {
        const auto profile = CurveProfile::make(g, true);
        const long long delta =
            search::delta_lower_bound(profile, search::DeltaMode::conservative);
        expect_ll(out, "cartesian min degree g=" + std::to_string(g), n,
                  search::min_degree_cartesian(g, delta).result);
    }
    static const long long table_n[] = {18, 20, 24, 28, 30, 36, 38, 40, 44, 48, 50, 54};
    for (long long g = 2; g <= 13; ++g) {
        const auto r = search::nonspecial_p4_exclusion(g);
        expect_ll(out, "published min-degree table g=" + std::to_string(g),
                  table_n[g - 2], r.result);
        expect(out, "no non-special embedding into P^4, g=" + std::to_string(g), "1",
               r.eliminated.empty() ? "0" : "1");
    }
    expect_ll(out, "double-curve genus bound, cartesian g=2", 225,
              search::gS_lower_bound(lattice::SurfaceKind::cartesian, 2));
    expect_ll(out, "double-curve genus bound, cartesian g=3", 331,
              search::gS_lower_bound(lattice::SurfaceKind::cartesian, 3));
    expect_ll(out, "double-curve genus bound, cartesian g=4", 670,
              search::gS_lower_bound(lattice::SurfaceKind::cartesian, 4));
    expect_ll(out, "double-curve genus bound, symmetric g=3", 130,
              search::gS_lower_bound(lattice::SurfaceKind::symmetric, 3));
    expect_ll(out, "double-curve genus bound, symmetric g=4", 280,
              search::gS_lower_bound(lattice::SurfaceKind::symmetric, 4));
}

void check_symmetric_min_degrees(GoldenOutcome& out) {
    out.citations.push_back(
        "elimination proofs: no degree-13..15 embedding of the genus-3 "
        "symmetric square, none of degree 16..19 at genus 4");
    const auto r3 = search::min_degree_symmetric(3, CurveProfile::make(3, true));
    expect_ll(out, "symmetric min degree g=3", 16, r3.result);
    bool has13 = false;
    std::string reasons13;
    for (const auto& e : r3.eliminated)
        if (e.candidate == "n=13") {
            has13 = true;
            reasons13 = e.reason;
        }
    expect(out, "g=3 n=13 eliminated", "1", has13 ? "1" : "0");
    for (const char* sol : {"(4,1)", "(5,2)", "(11,6)"})
        expect(out, std::string("g=3 n=13 lists solution ") + sol, "1",
               reasons13.find(sol) != std::string::npos ? "1" : "0");
    const auto r4 = search::min_degree_symmetric(4, CurveProfile::make(4, true));
    expect_ll(out, "symmetric min degree g=4", 20, r4.result);
    for (long long n = 16; n <= 19; ++n) {
        bool found = false;
        for (const auto& e : r4.eliminated)
            if (e.candidate == "n=" + std::to_string(n)) found = true;
        expect(out, "g=4 n=" + std::to_string(n) + " eliminated", "1", found ? "1" : "0");
    }
}

void check_p4_witness(GoldenOutcome& out) {
    out.citations.push_back(
        "the only bidegree below 600 admitting a double-point-free projection "
        "of the genus-2 square to P^4: (511, 79), |k| = 142, degree 82");
    const auto r = search::p4_search(2, 600);
    expect(out, "p4 witness count nonzero", "1", r.witnesses.empty() ? "0" : "1");
    if (!r.witnesses.empty()) {
        const auto& w = r.witnesses.front();
        expect(out, "p4 first witness",
               "(511, 79, 142)",
               "(" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                   std::to_string(w[2]) + ")");
        const long long n = 2 * (w[0] * w[1] - 2 * w[2] * w[2]);
        expect_ll(out, "p4 witness degree", 82, n);
        expect_ll(out, "p4 double-point equation n(n-10)", 10 * (w[0] + w[1]) + 4,
                  n * (n - 10));
    }
    bool any_balanced = false;
    for (const auto& w : r.witnesses)
        if (w[0] == w[1]) any_balanced = true;
    expect(out, "p4 search has no balanced (a = a') witness", "1",
           any_balanced ? "0" : "1");
}

void check_spot_grids(GoldenOutcome& out) {
    out.citations.push_back(
        "spot checks of the adjoint windows on the square (genus 2, 3) and on "
        "the symmetric square (genus 2, 3, 4)");
    struct CartSpot {
        long long g, a, k;
        Property p;
        const char* v;
    };
    const CartSpot cart[] = {
        {2, 5, 1, Property::very_ample, "yes"},
        {2, 5, 2, Property::very_ample, "no"},
        {2, 5, 2, Property::ample, "yes"},
        {2, 4, 0, Property::globally_generated, "yes"},
        {2, 4, 0, Property::very_ample, "no"},
        {2, 6, 2, Property::globally_generated, "yes"},
        {3, 7, 0, Property::very_ample, "yes"},
        {3, 7, 1, Property::very_ample, "yes"},
        {3, 8, 2, Property::very_ample, "unknown"},
        {3, 8, 2, Property::globally_generated, "yes"},
        {3, 6, 0, Property::globally_generated, "yes"},
        {3, 4, 0, Property::very_ample, "yes"},  // curated fact, not a window
    };
    for (const auto& s : cart) {
        const auto verdicts = s.g == 2 ? cones::cone_status_cartesian_g2(s.a, Rat(s.k))
                                       : cones::cone_status_cartesian_g3(s.a, s.k);
        expect(out,
               "g=" + std::to_string(s.g) + " D_{" + std::to_string(s.a) + "," +
                   std::to_string(s.a) + "," + std::to_string(s.k) + "} " +
                   cones::to_string(s.p),
               s.v, cones::to_string(verdict_for(verdicts, s.p)));
    }
    struct SymSpot {
        long long g, a, k;
        Property p;
        const char* v;
    };
    const SymSpot sym[] = {
        {2, 4, 1, Property::globally_generated, "yes"},
        {2, 4, 1, Property::non_special, "yes"},
        {2, 5, 1, Property::very_ample, "yes"},
        {2, 5, 3, Property::very_ample, "no"},
        {3, 6, 1, Property::globally_generated, "yes"},
        {3, 7, 3, Property::globally_generated, "unknown"},
        {3, 7, 1, Property::very_ample, "yes"},
        {3, 9, 4, Property::very_ample, "unknown"},
        {4, 8, 1, Property::globally_generated, "yes"},
        {4, 9, 0, Property::very_ample, "yes"},
        {4, 9, 1, Property::very_ample, "yes"},
    };
    for (const auto& s : sym) {
        const auto verdicts = cones::cone_status_symmetric(s.g, s.a, s.k);
        expect(out,
               "g=" + std::to_string(s.g) + " D'_{" + std::to_string(s.a) + "," +
                   std::to_string(s.k) + "} " + cones::to_string(s.p),
               s.v, cones::to_string(verdict_for(verdicts, s.p)));
    }
}

void check_transfer_grid(GoldenOutcome& out) {
    out.citations.push_back(
        "pullback transfer: D'_{a,k} and D_{a,a,k} agree on quasi-effectivity "
        "and nefness (genus 2, 3, |a|,|k| <= 20)");
    long long bad = 0;
    for (long long g = 2; g <= 3; ++g) {
        for (long long a = -20; a <= 20; ++a) {
            for (long long k = -20; k <= 20; ++k) {
                const auto cart = g == 2 ? cones::cone_status_cartesian_g2(a, Rat(k))
                                         : cones::cone_status_cartesian_g3(a, k);
                const auto q_sym = cones::qeff_symmetric(g, Rat(a), Rat(k));
                const auto n_sym = cones::nef_symmetric(g, Rat(a), Rat(k));
                const auto q_cart = verdict_for(cart, Property::quasi_effective);
                const auto n_cart = verdict_for(cart, Property::nef);
                if (lattice::to_string(q_sym) != std::string(cones::to_string(q_cart)))
                    ++bad;
                if (lattice::to_string(n_sym) != std::string(cones::to_string(n_cart)))
                    ++bad;
            }
        }
    }
    expect_ll(out, "transfer grid disagreements", 0, bad);
}

}  // namespace

GoldenOutcome run_golden_suite() {
    GoldenOutcome out;
    check_projection_tables(out);
    check_symmetric_triple(out);
    check_cone_boundaries(out);
    check_degree_searches(out);
    check_symmetric_min_degrees(out);
    check_p4_witness(out);
    check_spot_grids(out);
    check_transfer_grid(out);
    return out;
}

}  // namespace squarefold::golden
