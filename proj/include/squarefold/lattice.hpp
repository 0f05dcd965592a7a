#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squarefold/errors.hpp"
#include "squarefold/rational.hpp"

namespace squarefold::lattice {

enum class TriState { yes, no, unknown };

inline const char* to_string(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        default: return "unknown";
    }
}

/// Genus plus the moduli flags that drive cone tests, hyperbolicity and
/// minimal-degree policies.
struct CurveProfile {
    long long genus = 2;
    bool generic_moduli = false;
    TriState hyperelliptic = TriState::unknown;
    TriState bielliptic = TriState::unknown;
    std::optional<long long> delta_override;  // user-asserted lower bound for delta(C)

    /// Normalizes forced flags and validates the invariants:
    /// genus 2 is always hyperelliptic, and a generic curve of genus >= 3
    /// is neither hyperelliptic nor bielliptic.
    static CurveProfile make(long long genus, bool generic_moduli = false,
                             TriState hyperelliptic = TriState::unknown,
                             TriState bielliptic = TriState::unknown,
                             std::optional<long long> delta_override = std::nullopt);
};

/// The class D_{a,a',k} = (a+k)E + (a'+k)F - k*Delta on V = C x C.
///
/// (a, a') is the bidegree and k the valence. Coordinates are rational:
/// quarter-integer valence with integer bidegree is admitted to house the
/// orthogonal projections appearing in the genus-2 Reider analysis.
struct CartesianClass {
    Rat a, a_prime, k;
    long long genus = 2;

    bool is_symmetric() const { return a == a_prime; }
    bool is_integral() const {
        return is_integer(a) && is_integer(a_prime) && is_integer(k);
    }
    /// Quarter-integer valence, integer bidegree: the widest lattice any
    /// operation accepts.
    bool is_quarter_integral() const {
        return is_integer(a) && is_integer(a_prime) && is_integer(k * Rat(4));
    }

    CartesianClass operator+(const CartesianClass& o) const;
    CartesianClass operator-(const CartesianClass& o) const;
    CartesianClass operator*(const Rat& c) const;

    bool operator==(const CartesianClass&) const = default;
};

/// The class D'_{a,k} = (a+k)E' - (k/2)Delta' on V' = C_2.
struct SymmetricClass {
    Rat a, k;
    long long genus = 2;

    bool is_integral() const { return is_integer(a) && is_integer(k); }

    SymmetricClass operator+(const SymmetricClass& o) const;
    SymmetricClass operator-(const SymmetricClass& o) const;
    SymmetricClass operator*(const Rat& c) const;

    bool operator==(const SymmetricClass&) const = default;
};

/// c1^2, c2 and the holomorphic Euler characteristic, tied together by the
/// Noether identity 12*chi = c1^2 + c2.
struct ChernData {
    long long c1_sq = 0;
    long long c2 = 0;
    Rat chi;
};

enum class SurfaceKind { cartesian, symmetric };

inline const char* to_string(SurfaceKind s) {
    return s == SurfaceKind::cartesian ? "cartesian" : "symmetric";
}

// -- distinguished classes ---------------------------------------------------

CartesianClass diagonal(long long g);            // Delta = D_{1,1,-1}
CartesianClass hyperelliptic_graph(long long g); // D(i) = D_{1,1,1}, genus 2 only
CartesianClass fiber_E(long long g);             // E = D_{0,1,0}
CartesianClass fiber_F(long long g);             // F = D_{1,0,0}
SymmetricClass fiber_Eprime(long long g);        // E' = D'_{1,0}
SymmetricClass diagonal_prime(long long g);      // Delta' = 2 D'_{1,-1}
SymmetricClass theta_prime(long long g);         // Theta' = D'_{g,1}

// -- pairing and transport ---------------------------------------------------

/// D_{a,a',k} . D_{c,c',l} = ac' + a'c - 2gkl.
Rat intersect_cartesian(const CartesianClass& d1, const CartesianClass& d2);

/// D'_{a,k} . D'_{c,l} = ac - gkl.
Rat intersect_symmetric(const SymmetricClass& d1, const SymmetricClass& d2);

Rat self_intersection(const CartesianClass& d);
Rat self_intersection(const SymmetricClass& d);

/// pi^* D'_{a,k} = D_{a,a,k}; doubles the pairing.
CartesianClass pullback(const SymmetricClass& d);

/// Inverse of pullback on symmetric classes (pi_* pi^* = 2).
SymmetricClass pushforward_sym_part(const CartesianClass& d);

CartesianClass canonical_cartesian(long long g);  // D_{2g-2,2g-2,0}
SymmetricClass canonical_symmetric(long long g);  // D'_{2g-3,1}

ChernData chern_data(SurfaceKind surface, long long g);

// -- basis conversion --------------------------------------------------------

/// Coefficients of a cartesian class in the (E, F, Delta) basis:
/// D_{a,a',k} = (a+k)E + (a'+k)F - k*Delta.
struct EFDeltaCoords {
    Rat e, f, delta;
};

EFDeltaCoords to_ef_delta(const CartesianClass& d);
CartesianClass from_ef_delta(const EFDeltaCoords& c, long long g);

// -- named correspondence classes --------------------------------------------

struct NamedClass {
    std::string name;
    CartesianClass cls;
    Rat coefficient;       // multiplicity in front of cls (1 unless stated)
    Rat self_intersection; // of cls (the core class)
};

/// The distinguished correspondences at a given genus: Delta always, D(i)
/// for genus 2, and for genus 3 the bitangent correspondence B = D_{10,10,6}
/// with the tangent correspondences T, T^{-1} and G = (T + T^{-1})/4.
/// When d is supplied, the plane-nodal generalization of B for a degree-d
/// genus-g nodal plane curve is included (needs g <= (d-1)(d-2)/2), and for
/// g >= 3 the osculating-hyperplane correspondence with core D_{g^2-g-1,g}
/// and coefficient (g-1)(g-2).
std::vector<NamedClass> named_correspondences(long long g,
                                              std::optional<long long> d = std::nullopt);

/// Core class of the plane-nodal generalization of B: D_{a,a,k} with
/// a = (d-3)(d+g-2), k = d+g-4, carried with coefficient 2.
NamedClass plane_nodal_tangent_class(long long g, long long d);

/// Core class of the osculating-hyperplane correspondence:
/// D_{a,a,k} with a = g^2-g-1, k = g, coefficient (g-1)(g-2).
NamedClass osculating_class(long long g);

}  // namespace squarefold::lattice
