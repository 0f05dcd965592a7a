#pragma once

#include <vector>

#include "squarefold/lattice.hpp"

namespace squarefold::invariants {

using lattice::CartesianClass;
using lattice::ChernData;
using lattice::SymmetricClass;

/// The numeric profile of a generic projection to P^3: degree, sectional
/// genus, double-curve degree and geometric genus, pinch and triple point
/// counts, and the number b of double points of a projection to P^4.
///
/// The formulas are total over integers; negative counts are legal outputs
/// (the projection engine is also run on hypothetical non-embeddings) and
/// are merely flagged.
struct ProjectionInvariants {
    long long n = 0;
    long long g_H = 0;
    long long d_dcurve = 0;
    long long g_dcurve = 0;
    long long pinch = 0;
    long long triple = 0;
    long long double_pts_P4 = 0;

    /// All seven counts nonnegative, as they must be for an actual
    /// embedding in P^N, N >= 5.
    bool plausible() const {
        return pinch >= 0 && triple >= 0 && double_pts_P4 >= 0 && d_dcurve >= 0;
    }

    bool operator==(const ProjectionInvariants&) const = default;
};

/// Evaluates the projection relations at (n, g_H) for a surface with the
/// given Chern data. Every division is checked for exactness; a remainder
/// means the triple cannot arise from an embedded surface.
ProjectionInvariants severi_profile(long long n, long long g_H, const ChernData& chern);

/// Projection profile of the embedding of C x C given by an integral very
/// ample class (validity of the class is not checked here).
ProjectionInvariants cartesian_profile(long long g, const CartesianClass& cls);

/// Same for the symmetric square and D'_{a,k}.
ProjectionInvariants symmetric_profile(long long g, const SymmetricClass& cls);

struct AuditResult {
    bool ok = true;
    std::vector<int> violated;  // relation indices 1..5
};

/// Checks the five original projection relations simultaneously. The system
/// is over-determined (the first four satisfy a linear relation), which is
/// what makes it a useful cross-check oracle for the profile functions.
AuditResult consistency_audit(const ProjectionInvariants& pi, const ChernData& chern);

}  // namespace squarefold::invariants
