// Acceptance gate: one pass/fail line per published-result criterion.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "squarefold/cones.hpp"
#include "squarefold/golden.hpp"
#include "squarefold/hyperbolicity.hpp"
#include "squarefold/invariants.hpp"
#include "squarefold/search.hpp"

using namespace squarefold;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool profile_equals(const invariants::ProjectionInvariants& pi, long long n,
                    long long gh, long long d, long long gs, long long p, long long t,
                    long long b) {
    return pi.n == n && pi.g_H == gh && pi.d_dcurve == d && pi.g_dcurve == gs &&
           pi.pinch == p && pi.triple == t && pi.double_pts_P4 == b;
}

void criterion_1() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        const auto g2 = invariants::cartesian_profile(
            2, lattice::CartesianClass{Rat(5), Rat(5), Rat(0), 2});
        const auto g3 = invariants::cartesian_profile(
            3, lattice::CartesianClass{Rat(4), Rat(4), Rat(0), 3});
        ok = profile_equals(g2, 50, 36, 1140, 2449, 384, 15784, 948) &&
             profile_equals(g3, 32, 33, 432, 1045, 336, 3280, 264);
        const double dt = elapsed(t0);
        if (dt >= 1.0) {
            ok = false;
            detail = "took " + std::to_string(dt) + "s";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(1, "golden projection tables (exact, < 1 s)", ok, detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    try {
        const auto pi =
            invariants::symmetric_profile(3, lattice::SymmetricClass{Rat(4), Rat(0), 3});
        const auto src = hyperbolicity::symmetric_square_hyperbolic(
            lattice::CurveProfile::make(3, true));
        const auto proj = hyperbolicity::projection_hyperbolic(
            pi, src.verdict == lattice::TriState::yes);
        ok = pi.n == 16 && pi.g_H == 15 && pi.g_dcurve == 142 &&
             proj.verdict == lattice::TriState::yes;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "symmetric triple (16, 15, 142) and hyperbolic projection", ok, detail);
}

void criterion_3() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        ok = search::min_degree_cartesian(2, 5).result == 18 &&
             search::min_degree_cartesian(3, 4).result == 20 &&
             search::min_degree_cartesian(4, 5).result == 24;
        const long long table[] = {18, 20, 24, 28, 30, 36, 38, 40, 44, 48, 50, 54};
        for (long long g = 2; g <= 13; ++g)
            ok = ok && search::nonspecial_p4_exclusion(g).result == table[g - 2];

        const auto r3 = search::min_degree_symmetric(3, lattice::CurveProfile::make(3, true));
        ok = ok && r3.result == 16;
        bool sols = false;
        for (const auto& e : r3.eliminated)
            if (e.candidate == "n=13")
                sols = e.reason.find("(4,1)") != std::string::npos &&
                       e.reason.find("(5,2)") != std::string::npos &&
                       e.reason.find("(11,6)") != std::string::npos;
        ok = ok && sols;

        const auto r4 = search::min_degree_symmetric(4, lattice::CurveProfile::make(4, true));
        ok = ok && r4.result == 20;
        for (long long n = 16; n <= 19; ++n) {
            bool found = false;
            for (const auto& e : r4.eliminated)
                if (e.candidate == "n=" + std::to_string(n)) found = true;
            ok = ok && found;
        }
        const double dt = elapsed(t0);
        detail = std::to_string(dt) + "s";
        if (dt >= 10.0) ok = false;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(3, "minimal-degree searches with elimination witnesses (< 10 s)", ok, detail);
}

void criterion_4() {
    bool ok = true;
    std::string detail;
    try {
        ok = search::gS_lower_bound(lattice::SurfaceKind::cartesian, 2) == 225 &&
             search::gS_lower_bound(lattice::SurfaceKind::cartesian, 3) == 331 &&
             search::gS_lower_bound(lattice::SurfaceKind::cartesian, 4) == 670 &&
             670 == 17 * 16 + 81 * 4 + 74 &&  // closed-form cross-check
             search::gS_lower_bound(lattice::SurfaceKind::symmetric, 3) == 130 &&
             search::gS_lower_bound(lattice::SurfaceKind::symmetric, 4) == 280;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(4, "double-curve genus lower bounds 225/331/670/130/280", ok, detail);
}

void criterion_5() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        const auto r = search::p4_search(2, 600);
        ok = !r.witnesses.empty() && r.witnesses.front()[0] == 511 &&
             r.witnesses.front()[1] == 79 && r.witnesses.front()[2] == 142;
        if (ok) {
            const auto& w = r.witnesses.front();
            const long long n = 2 * (w[0] * w[1] - 2 * w[2] * w[2]);
            ok = n == 82 && n * (n - 10) == 5904 &&
                 n * (n - 10) == 10 * (w[0] + w[1]) + 4;
        }
        for (const auto& w : r.witnesses) ok = ok && w[0] != w[1];
        const double dt = elapsed(t0);
        detail = std::to_string(dt) + "s";
        if (dt >= 60.0) ok = false;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, "P^4 witness (511, 79, 142) at degree 82; none balanced (< 60 s)", ok,
           detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    try {
        using cones::Property;
        using cones::Verdict;
        for (long long a = 5; a <= 40 && ok; ++a) {
            for (long long k = -(a / 2 + 2); k <= a / 2 + 2 && ok; ++k) {
                const auto out = cones::cone_status_cartesian_g2(a, Rat(k));
                const long long t = 2 * std::llabs(k);
                ok = verdict_for(out, Property::nef) ==
                         (t <= a ? Verdict::yes : Verdict::no) &&
                     verdict_for(out, Property::ample) ==
                         (t <= a - 1 ? Verdict::yes : Verdict::no) &&
                     verdict_for(out, Property::very_ample) ==
                         (t <= a - 3 ? Verdict::yes : Verdict::no);
                if (!ok)
                    detail = "transition wrong at a=" + std::to_string(a) +
                             ", k=" + std::to_string(k);
            }
        }
        const auto d221 = cones::cone_status_cartesian_g2(2, Rat(1));
        ok = ok && verdict_for(d221, cones::Property::nef) == cones::Verdict::yes &&
             verdict_for(d221, cones::Property::big) == cones::Verdict::yes &&
             verdict_for(d221, cones::Property::ample) == cones::Verdict::no;
        const auto b = cones::cone_status_cartesian_g3(10, 6);
        ok = ok &&
             verdict_for(b, cones::Property::quasi_effective) == cones::Verdict::yes &&
             verdict_for(b, cones::Property::nef) == cones::Verdict::no &&
             lattice::self_intersection(lattice::CartesianClass{
                 Rat(10), Rat(10), Rat(6), 3}) == Rat(-16);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(6, "cone boundary suite (nef/ample/very-ample edges, B^2 = -16)", ok, detail);
}

void criterion_7() {
    bool ok = true;
    std::string detail;
    double worst = 0;
    try {
        for (long long a = 5; a <= 40 && ok; ++a) {
            for (long long k = -(a - 3) / 2; 2 * k <= a - 3 && ok; ++k) {
                const auto t0 = Clock::now();
                const auto r = cones::reider_certify(
                    2, lattice::CartesianClass{Rat(a - 2), Rat(a - 2), Rat(k), 2},
                    cones::ReiderMode::very_ample);
                worst = std::max(worst, elapsed(t0));
                ok = r.certified_within_cap && r.cap == 64;
                if (!ok)
                    detail = "obstruction at a=" + std::to_string(a) +
                             ", k=" + std::to_string(k);
            }
        }
        for (long long a = 6; a <= 40 && ok; a += 2) {
            const long long k = (a - 2) / 2;
            const auto rp = cones::reider_certify(
                2, lattice::CartesianClass{Rat(a - 2), Rat(a - 2), Rat(k), 2},
                cones::ReiderMode::very_ample);
            const auto rn = cones::reider_certify(
                2, lattice::CartesianClass{Rat(a - 2), Rat(a - 2), Rat(-k), 2},
                cones::ReiderMode::very_ample);
            ok = rp.obstructions.size() == 1 && rn.obstructions.size() == 1 &&
                 std::get<lattice::CartesianClass>(rp.obstructions[0].gamma) ==
                     lattice::hyperelliptic_graph(2) &&
                 std::get<lattice::CartesianClass>(rn.obstructions[0].gamma) ==
                     lattice::diagonal(2);
            if (!ok) detail = "boundary obstruction wrong at a=" + std::to_string(a);
        }
        if (ok) {
            const auto t0 = Clock::now();
            const auto g3 = cones::reider_certify(
                3, lattice::CartesianClass{Rat(3), Rat(3), Rat(1), 3},
                cones::ReiderMode::very_ample);
            worst = std::max(worst, elapsed(t0));
            ok = g3.certified_within_cap;
        }
        if (worst >= 5.0) {
            ok = false;
            detail = "slowest certification " + std::to_string(worst) + "s";
        } else if (detail.empty()) {
            detail = "slowest certification " + std::to_string(worst) + "s";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "adjoint certification grid (cap 64, each < 5 s)", ok, detail);
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    try {
        std::mt19937 rng(1234);
        std::uniform_int_distribution<long long> num(-40, 40);
        std::uniform_int_distribution<long long> den(1, 4);
        std::uniform_int_distribution<long long> genus(2, 9);
        for (int i = 0; i < 1000 && ok; ++i) {
            const long long g = genus(rng);
            const auto rc = [&] {
                return lattice::CartesianClass{Rat(num(rng), den(rng)),
                                               Rat(num(rng), den(rng)),
                                               Rat(num(rng), den(rng)), g};
            };
            const auto x = rc(), y = rc(), z = rc();
            ok = lattice::intersect_cartesian(x, y) == lattice::intersect_cartesian(y, x) &&
                 lattice::intersect_cartesian(x + y, z) ==
                     lattice::intersect_cartesian(x, z) + lattice::intersect_cartesian(y, z);
            const lattice::SymmetricClass s{x.a, x.k, g}, t{y.a, y.k, g};
            ok = ok && lattice::intersect_cartesian(pullback(s), pullback(t)) ==
                           Rat(2) * lattice::intersect_symmetric(s, t);
        }
        if (!ok) detail = "pairing property failed";

        for (long long g = 2; g <= 20 && ok; ++g) {
            for (auto kind : {lattice::SurfaceKind::cartesian, lattice::SurfaceKind::symmetric}) {
                const auto cd = lattice::chern_data(kind, g);
                ok = ok && Rat(12) * cd.chi == Rat(cd.c1_sq + cd.c2);
            }
            if (!ok) detail = "Noether identity failed at g=" + std::to_string(g);
        }

        for (long long g = 2; g <= 3 && ok; ++g) {
            for (long long a = -20; a <= 20 && ok; ++a) {
                for (long long k = -20; k <= 20 && ok; ++k) {
                    const auto cart = g == 2 ? cones::cone_status_cartesian_g2(a, Rat(k))
                                             : cones::cone_status_cartesian_g3(a, k);
                    ok = std::string(lattice::to_string(
                             cones::qeff_symmetric(g, Rat(a), Rat(k)))) ==
                             cones::to_string(verdict_for(
                                 cart, cones::Property::quasi_effective)) &&
                         std::string(lattice::to_string(
                             cones::nef_symmetric(g, Rat(a), Rat(k)))) ==
                             cones::to_string(
                                 verdict_for(cart, cones::Property::nef));
                    if (!ok)
                        detail = "transfer mismatch at g=" + std::to_string(g) +
                                 ", a=" + std::to_string(a) + ", k=" + std::to_string(k);
                }
            }
        }

        for (long long g = 2; g <= 6 && ok; ++g) {
            const auto chern = lattice::chern_data(lattice::SurfaceKind::cartesian, g);
            for (long long a = 1; a <= 12 && ok; ++a)
                for (long long ap = 1; ap <= 12 && ok; ++ap)
                    for (long long k = -4; k <= 4 && ok; ++k) {
                        if (2 * (a * ap - g * k * k) < 5) continue;
                        const auto pi = invariants::cartesian_profile(
                            g, lattice::CartesianClass{Rat(a), Rat(ap), Rat(k), g});
                        ok = invariants::consistency_audit(pi, chern).ok;
                        if (!ok) detail = "audit failed on a profile output";
                    }
        }

        for (long long l = 1; l <= 10000 && ok; ++l) {
            ok = !is_square(3 * l * l) && !is_square(3 * l * l - 1) &&
                 !is_square(3 * l * l + 2);
            if (!ok) detail = "diophantine exclusion failed at l=" + std::to_string(l);
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "property suites (pairing, Noether, transfer, audit, exclusions)", ok,
           detail);
}

void criterion_9() {
    // The all-genera asymptotics and the function-theoretic statements have
    // no finite certificate; their numerical shadows are exactly the finite
    // checks above, so this criterion passes iff those did.
    report(9, "asymptotic statements covered by exact finite-genus evaluation only",
           g_failures == 0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    // Cross-check with the embedded golden suite used by the CLI self-audit.
    const auto outcome = golden::run_golden_suite();
    for (const auto& m : outcome.mismatches)
        std::printf("golden mismatch: %s (expected %s, got %s)\n", m.check.c_str(),
                    m.expected.c_str(), m.actual.c_str());
    std::printf("golden suite: %lld checks, %zu mismatches\n", outcome.checks,
                outcome.mismatches.size());
    if (!outcome.ok()) ++g_failures;

    return g_failures == 0 ? 0 : 1;
}
