#include "squarefold/invariants.hpp"

#include "squarefold/errors.hpp"

namespace squarefold::invariants {

namespace {

long long exact_integer(const Rat& x, const char* what) {
    if (!is_integer(x))
        throw InconsistencyError(std::string("projection profile: non-integer ") + what +
                                 " = " + squarefold::to_string(x));
    return as_integer(x);
}

}  // namespace

ProjectionInvariants severi_profile(long long n, long long g_H, const ChernData& chern) {
    if (n < 5)
        throw DegenerateClassError(
            "severi_profile: degree below 5 is degenerate for a projection to P^3");
    const Rat N(n), GH(g_H), C1(chern.c1_sq), C2(chern.c2);
    const Rat HK = Rat(2) * GH - Rat(2) - N;  // adjunction

    const Rat d = (N - 1) * (N - 2) / Rat(2) - GH;

    // The pinch count admits three equivalent expressions; computing all of
    // them is the cheapest guard against a formula regression.
    const Rat p_a = C1 - C2 + Rat(2) * N + Rat(4) * (N - 1) * (N - 2) - Rat(8) * d - Rat(8);
    const Rat p_b = C1 - C2 + Rat(2) * N + Rat(8) * (GH - 1);
    const Rat p_c = C1 - C2 + Rat(6) * N + Rat(4) * HK;
    if (p_a != p_b || p_b != p_c)
        throw InconsistencyError("severi_profile: pinch-count expressions disagree");

    const Rat gS = (N * N - Rat(7) * N + Rat(26)) / Rat(2) + (N - 12) * GH -
                   (Rat(5) * C1 - Rat(3) * C2) / Rat(4);
    const Rat t = (N * N - Rat(3) * N + Rat(8)) * (N - 6) / Rat(6) - (N - 8) * GH +
                  (Rat(2) * C1 - C2) / Rat(3);

    const Rat b_a = (N * (N - 10) - Rat(5) * HK - C1 + C2) / Rat(2);
    const Rat b_b = (N * (N - 5) - Rat(10) * (GH - 1) - C1 + C2) / Rat(2);
    if (b_a != b_b)
        throw InconsistencyError("severi_profile: double-point expressions disagree");

    ProjectionInvariants pi;
    pi.n = n;
    pi.g_H = g_H;
    pi.d_dcurve = exact_integer(d, "double-curve degree");
    pi.g_dcurve = exact_integer(gS, "double-curve genus");
    pi.pinch = exact_integer(p_b, "pinch count");
    pi.triple = exact_integer(t, "triple-point count");
    pi.double_pts_P4 = exact_integer(b_b, "P^4 double-point count");
    return pi;
}

ProjectionInvariants cartesian_profile(long long g, const CartesianClass& cls) {
    if (cls.genus != g)
        throw GenusMismatchError("cartesian_profile: class genus differs from argument");
    if (!cls.is_integral())
        throw NonIntegralClassError("cartesian_profile: needs an integral class");

    const Rat N = Rat(2) * (cls.a * cls.a_prime - Rat(g) * cls.k * cls.k);
    if (N <= Rat(0))
        throw DegenerateClassError("cartesian_profile: class has non-positive self-intersection");
    const long long n = as_integer(N);

    const Rat M = Rat(g - 1) * (cls.a + cls.a_prime);  // D . Delta contribution
    const long long g_H = exact_integer(N / Rat(2) + Rat(1) + M, "sectional genus");

    ProjectionInvariants pi = severi_profile(n, g_H, lattice::chern_data(lattice::SurfaceKind::cartesian, g));

    // Cross-check against the closed forms in bidegree and valence.
    const Rat E((g - 1) * (g - 1));
    const Rat d_cf = N * (N - 4) / Rat(2) - M;
    const Rat gS_cf = (Rat(2) * N * N - Rat(17) * N + Rat(2)) / Rat(2) + (N - 12) * M - Rat(7) * E;
    const Rat p_cf = Rat(2) * (Rat(3) * N + Rat(4) * M + Rat(2) * E);
    const Rat t_cf = N * (N * N - Rat(12) * N + Rat(44)) / Rat(6) - (N - 8) * M + Rat(4) * E;
    const Rat b_cf = N * (N - 10) / Rat(2) - Rat(5) * M - Rat(2) * E;
    if (Rat(pi.d_dcurve) != d_cf || Rat(pi.g_dcurve) != gS_cf || Rat(pi.pinch) != p_cf ||
        Rat(pi.triple) != t_cf || Rat(pi.double_pts_P4) != b_cf)
        throw InconsistencyError("cartesian_profile: closed forms disagree with severi_profile");
    return pi;
}

ProjectionInvariants symmetric_profile(long long g, const SymmetricClass& cls) {
    if (cls.genus != g)
        throw GenusMismatchError("symmetric_profile: class genus differs from argument");
    if (!cls.is_integral())
        throw NonIntegralClassError("symmetric_profile: needs an integral class");

    const Rat N = cls.a * cls.a - Rat(g) * cls.k * cls.k;
    if (N <= Rat(0))
        throw DegenerateClassError("symmetric_profile: class has non-positive self-intersection");
    const long long n = as_integer(N);

    const long long g_H = exact_integer(
        (N + Rat(2) + Rat(2 * g - 3) * cls.a - Rat(g) * cls.k) / Rat(2), "sectional genus");

    ProjectionInvariants pi = severi_profile(n, g_H, lattice::chern_data(lattice::SurfaceKind::symmetric, g));

    const Rat G(g), GH(g_H);
    const Rat gS_cf =
        (N * N - Rat(7) * N - Rat(7) * G * G + Rat(25) * G + Rat(8)) / Rat(2) + (N - 12) * GH;
    const Rat b_cf = N * (N - 5) / Rat(2) - Rat(5) * (GH - 1) - Rat((g - 1) * (g - 3));
    if (Rat(pi.g_dcurve) != gS_cf || Rat(pi.double_pts_P4) != b_cf)
        throw InconsistencyError("symmetric_profile: closed forms disagree with severi_profile");
    return pi;
}

AuditResult consistency_audit(const ProjectionInvariants& pi, const ChernData& chern) {
    const Rat N(pi.n), D(pi.d_dcurve), GS(pi.g_dcurve), T(pi.triple), P(pi.pinch),
        B(pi.double_pts_P4), GH(pi.g_H), C1(chern.c1_sq), C2(chern.c2);

    AuditResult r;
    auto check = [&r](int idx, bool ok) {
        if (!ok) {
            r.ok = false;
            r.violated.push_back(idx);
        }
    };
    check(1, C1 == N * (N - 4) * (N - 4) - (Rat(3) * N - 16) * D + Rat(3) * T - P);
    check(2, C2 == N * (N * N - Rat(4) * N + 6) - (Rat(3) * N - 8) * D + Rat(3) * T - Rat(2) * P);
    check(3, (C1 + C2) / Rat(12) ==
                 (N - 1) * (N - 2) * (N - 3) / Rat(6) - D * (N - 4) + GS + Rat(2) * T);
    check(4, P == Rat(2) * D * (N - 4) - Rat(6) * T - Rat(4) * (GS - 1));
    check(5, B == (N * (N - 5) - Rat(10) * (GH - 1) - C1 + C2) / Rat(2));
    return r;
}

}  // namespace squarefold::invariants
