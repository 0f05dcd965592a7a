#include "squarefold/search.hpp"

#include <algorithm>
#include <sstream>

#include "squarefold/errors.hpp"

namespace squarefold::search {

long long delta_lower_bound(const CurveProfile& profile, DeltaMode mode) {
    const long long g = profile.genus;
    long long delta;
    if (g == 2) {
        delta = 5;  // space curves of degree <= 4 have genus <= 1
    } else {
        delta = 3;
        while ((delta - 1) * (delta - 2) < 2 * g) ++delta;
    }
    if (mode == DeltaMode::sharp) {
        if (g == 4 && profile.hyperelliptic == lattice::TriState::no) delta = std::max(delta, 6LL);
        if (g == 6 && profile.generic_moduli) delta = std::max(delta, 8LL);
    }
    if (profile.delta_override) delta = std::max(delta, *profile.delta_override);
    return delta;
}

SearchReport min_degree_cartesian(long long g, long long delta) {
    if (g < 2) throw std::domain_error("min_degree_cartesian: genus must be >= 2");
    if (delta < 1) throw std::domain_error("min_degree_cartesian: delta must be >= 1");
    const long long rhs = 4 * (g - 1) * (g - 1 + 5 * delta);
    SearchReport r;
    r.query = "min even degree n > 10 with n(n-10) >= " + std::to_string(rhs) +
              " (g=" + std::to_string(g) + ", delta=" + std::to_string(delta) + ")";
    r.bounds_used = "delta(C) = " + std::to_string(delta) + "; n even";
    long long n = 12;
    while (n * (n - 10) < rhs) {
        r.eliminated.push_back({"n=" + std::to_string(n),
                                std::to_string(n) + "*" + std::to_string(n - 10) + " = " +
                                    std::to_string(n * (n - 10)) + " < " +
                                    std::to_string(rhs)});
        n += 2;
    }
    r.result = n;
    r.exhaustive_within = "even n in [12, " + std::to_string(n) + "]";
    return r;
}

namespace {

/// True when (n-5)^2 > 2g^2 - 8g + 31 + 5*delta*(2g - sqrt(g) - 3), decided
/// exactly.
bool base_bound_holds(long long g, long long delta, long long n) {
    const Rat lhs((n - 5) * (n - 5));
    const Rat rational_part(2 * g * g - 8 * g + 31 + 5 * delta * (2 * g - 3));
    // lhs > rational_part - 5*delta*sqrt(g)
    return cmp_root(lhs - rational_part, Rat(-5 * delta), g) > 0;
}

/// Sectional genus of D'_{a,k} as a rational: (n + 2 + (2g-3)a - gk)/2.
Rat sectional_genus(long long g, long long n, long long a, long long k) {
    return Rat(n + 2 + (2 * g - 3) * a - g * k, 2);
}

/// Smallest a such that every solution of a^2 - g k^2 = n with that or a
/// larger first coordinate has sectional genus above the ceiling: solutions
/// satisfy |k| < a/sqrt(g), so g_H > (n + 2 + a(2g - 3 - sqrt(g)))/2, which
/// grows with a.
long long forced_violation_bound(long long g, long long n, const Rat& ceiling,
                                 long long limit) {
    for (long long a = 1; a <= limit; ++a) {
        // (n + 2 + a(2g-3) - a*sqrt(g)) / 2 > ceiling
        const Rat x = Rat(n + 2 + a * (2 * g - 3)) - Rat(2) * ceiling;
        if (cmp_root(x, Rat(a), g) > 0) return a;
    }
    return limit + 1;
}

}  // namespace

SearchReport min_degree_symmetric(long long g, const CurveProfile& profile, long long a_cap) {
    if (g < 3) throw std::domain_error("min_degree_symmetric: genus must be >= 3");
    if (profile.genus != g)
        throw GenusMismatchError("min_degree_symmetric: profile genus mismatch");
    if (a_cap <= 0) a_cap = 80 * g;
    const long long delta = delta_lower_bound(profile, DeltaMode::conservative);

    long long n_base = 6;
    while (!base_bound_holds(g, delta, n_base)) ++n_base;

    SearchReport r;
    r.query = "min degree n of an embedding of the symmetric square (g=" +
              std::to_string(g) + ")";
    r.bounds_used = "delta(C) = " + std::to_string(delta) +
                    "; base bound n >= " + std::to_string(n_base) +
                    " from the quadratic estimate; a >= delta on every solution";
    const long long n_stop = n_base + 32;

    for (long long n = n_base; n <= n_stop; ++n) {
        const Rat ceiling(n * n - 5 * n + 10 - 2 * (g - 1) * (g - 3), 10);
        const long long forced = forced_violation_bound(g, n, ceiling, a_cap);
        if (forced > a_cap) {
            throw InconclusiveError(
                "min_degree_symmetric: a_cap=" + std::to_string(a_cap) +
                " too small to certify candidate n=" + std::to_string(n));
        }
        bool survivor = false;
        std::vector<std::array<long long, 3>> surviving;
        std::ostringstream reasons;
        bool any_solution = false;
        for (long long a = delta; a <= a_cap; ++a) {
            const long long q = a * a - n;
            if (q < 0 || q % g != 0 || !is_square(q / g)) continue;
            const long long k = isqrt(q / g);
            any_solution = true;
            // The positive-valence sign minimizes the sectional genus, so
            // it decides survival for both signs.
            const Rat gh = sectional_genus(g, n, a, k);
            if (!is_integer(gh)) {
                if (reasons.tellp() > 0) reasons << "; ";
                reasons << "(" << a << "," << k << "): sectional genus "
                        << squarefold::to_string(gh) << " not an integer";
            } else if (gh > ceiling) {
                if (reasons.tellp() > 0) reasons << "; ";
                reasons << "(" << a << "," << k << "): g_H = " << squarefold::to_string(gh)
                        << " > " << squarefold::to_string(ceiling);
            } else {
                survivor = true;
                surviving.push_back({a, k, as_integer(gh)});
            }
        }
        if (survivor) {
            r.result = n;
            r.witnesses = surviving;
            r.exhaustive_within =
                "n in [" + std::to_string(n_base) + ", " + std::to_string(n) +
                "], a in [" + std::to_string(delta) + ", " + std::to_string(a_cap) +
                "] (violation forced for a >= " + std::to_string(forced) + ")";
            return r;
        }
        r.eliminated.push_back(
            {"n=" + std::to_string(n),
             any_solution ? reasons.str()
                          : "no solutions of a^2 - " + std::to_string(g) +
                                "k^2 = " + std::to_string(n) + " with a >= " +
                                std::to_string(delta)});
    }
    throw InconclusiveError("min_degree_symmetric: no surviving degree within " +
                            std::to_string(n_stop));
}

SearchReport p4_search(long long g, long long a_max) {
    if (g < 2) throw std::domain_error("p4_search: genus must be >= 2");
    SearchReport r;
    r.query = "solutions of n(n-10) = 10(g-1)(a+a') + 4(g-1)^2 passing the "
              "necessary ampleness filters (g=" +
              std::to_string(g) + ")";
    r.witnesses = detail::p4_scan_parallel(g, a_max);
    r.bounds_used = "filters: 2k^2 < aa', 4|k| <= a+a'-5, a,a' >= 5";
    r.exhaustive_within = "5 <= a' <= a <= " + std::to_string(a_max) + ", k >= 0";
    return r;
}

long long gS_lower_bound(SurfaceKind kind, long long g) {
    if (kind == SurfaceKind::cartesian) {
        if (g < 2) throw NotApplicableError("gS_lower_bound: cartesian needs g >= 2");
        const auto profile = CurveProfile::make(g, true);
        const long long delta = delta_lower_bound(profile, DeltaMode::conservative);
        const long long n = min_degree_cartesian(g, delta).result;
        const Rat gs = Rat(2 * n * n - 17 * n + 2, 2) +
                       Rat(2 * delta * (n - 12) * (g - 1)) - Rat(7 * (g - 1) * (g - 1));
        if (!is_integer(gs))
            throw InconsistencyError("gS_lower_bound: non-integer cartesian bound");
        return as_integer(gs);
    }
    if (g != 3 && g != 4)
        throw NotApplicableError("gS_lower_bound: symmetric route covers g = 3 and 4");
    const auto profile = CurveProfile::make(g, true);
    const long long delta = delta_lower_bound(profile, DeltaMode::conservative);
    const long long n = min_degree_symmetric(g, profile).result;
    // Minimal sectional genus: strict bound 2*g_H > n + 2 + delta(2g-3-sqrt(g)).
    long long g_H = 0;
    while (cmp_root(Rat(2 * g_H - n - 2 - delta * (2 * g - 3)), Rat(-delta), g) <= 0) ++g_H;
    Rat gs = Rat(n * n - 7 * n - 7 * g * g + 25 * g + 8, 2) + Rat((n - 12) * g_H);
    if (!is_integer(gs))
        throw InconsistencyError("gS_lower_bound: non-integer symmetric bound");
    return as_integer(gs);
}

SearchReport nonspecial_p4_exclusion(long long g) {
    if (g < 2 || g > 13)
        throw std::domain_error("nonspecial_p4_exclusion: tabulated for 2 <= g <= 13");
    static const long long table_n[] = {18, 20, 24, 28, 30, 36, 38, 40, 44, 48, 50, 54};
    static const long long table_delta[] = {5, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7};
    const long long n = table_n[g - 2];
    const long long delta = table_delta[g - 2];
    const long long lhs = (n - 5) * (n - 10);
    const long long rhs = 14 * (g - 1) * (g - 1);
    SearchReport r;
    r.query = "non-special embedding of the square into P^4, genus " + std::to_string(g);
    r.result = n;
    r.bounds_used = "tabulated minimal degree n = " + std::to_string(n) +
                    " at delta(C) >= " + std::to_string(delta);
    if (lhs <= rhs)
        throw InconsistencyError("nonspecial_p4_exclusion: table row fails the exclusion");
    r.eliminated.push_back(
        {"non-special embedding into P^4",
         "(n-5)(n-10) = " + std::to_string(lhs) + " > " + std::to_string(rhs) +
             " = 14(g-1)^2, contradicting linear normality"});
    r.exhaustive_within =
        "single table row; for a+a' >= g+1 the chain 14(g-1)^2 >= (n-10)^2 >= "
        "16(g-1)^2 is contradictory for every g >= 2";
    return r;
}

}  // namespace squarefold::search
