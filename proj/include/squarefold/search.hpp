#pragma once

#include <array>
#include <string>
#include <vector>

#include "squarefold/lattice.hpp"

namespace squarefold::search {

using lattice::CurveProfile;
using lattice::SurfaceKind;

enum class DeltaMode { conservative, sharp };

/// One rejected candidate together with the exact inequality that killed it.
struct Elimination {
    std::string candidate;
    std::string reason;
};

struct SearchReport {
    std::string query;
    long long result = 0;  // minimal degree, or 0 when the witness list is the result
    std::vector<std::array<long long, 3>> witnesses;  // (a, a', |k|) triples
    std::vector<Elimination> eliminated;
    std::string bounds_used;
    std::string exhaustive_within;
};

/// Lower bound for the minimal degree of a projective-space embedding of a
/// curve with the given profile. Conservative mode uses only the genus
/// formula for space curves; sharp mode adds the known better values for
/// special genera. A user-asserted delta_override wins if larger.
long long delta_lower_bound(const CurveProfile& profile, DeltaMode mode);

/// Smallest even n > 10 with n(n-10) >= 4(g-1)(g-1+5*delta).
SearchReport min_degree_cartesian(long long g, long long delta);

/// Minimal degree of an embedding of the symmetric square: base bound from
/// the quadratic estimate, then per-degree elimination through the
/// diophantine equation a^2 - g k^2 = n and the sectional-genus ceiling.
SearchReport min_degree_symmetric(long long g, const CurveProfile& profile,
                                  long long a_cap = 0 /* 0 = default 80*g */);

/// All (a, a', |k|) with 5 <= a' <= a <= a_max whose degree satisfies the
/// surface-in-P4 double-point equation and the symmetric-square necessary
/// ampleness filters.
SearchReport p4_search(long long g, long long a_max);

/// Lower bound for the geometric genus of the double curve of a generic
/// projection to P^3 of a minimal-degree embedding.
long long gS_lower_bound(SurfaceKind kind, long long g);

/// For 2 <= g <= 13: the published minimal-degree table value and the
/// verification that (n-5)(n-10) > 14(g-1)^2 at that value, which excludes
/// a non-special embedding of the square into P^4.
SearchReport nonspecial_p4_exclusion(long long g);

namespace detail {
std::vector<std::array<long long, 3>> p4_scan_serial(long long g, long long a_max);
std::vector<std::array<long long, 3>> p4_scan_parallel(long long g, long long a_max);
}  // namespace detail

}  // namespace squarefold::search
