#include "squarefold/lattice.hpp"

namespace squarefold::lattice {

CurveProfile CurveProfile::make(long long genus, bool generic_moduli,
                                TriState hyperelliptic, TriState bielliptic,
                                std::optional<long long> delta_override) {
    if (genus < 2) throw std::domain_error("CurveProfile: genus must be >= 2");
    if (genus == 2) {
        if (hyperelliptic == TriState::no)
            throw std::domain_error("CurveProfile: every genus-2 curve is hyperelliptic");
        hyperelliptic = TriState::yes;
    }
    if (generic_moduli && genus >= 3) {
        if (hyperelliptic == TriState::yes || bielliptic == TriState::yes)
            throw std::domain_error(
                "CurveProfile: generic curve of genus >= 3 is neither hyperelliptic nor bielliptic");
        hyperelliptic = TriState::no;
        bielliptic = TriState::no;
    }
    if (delta_override && *delta_override < 1)
        throw std::domain_error("CurveProfile: delta_override must be >= 1");
    return CurveProfile{genus, generic_moduli, hyperelliptic, bielliptic, delta_override};
}

CartesianClass CartesianClass::operator+(const CartesianClass& o) const {
    if (genus != o.genus) throw GenusMismatchError("cartesian class addition: genus mismatch");
    return {a + o.a, a_prime + o.a_prime, k + o.k, genus};
}
CartesianClass CartesianClass::operator-(const CartesianClass& o) const {
    if (genus != o.genus) throw GenusMismatchError("cartesian class subtraction: genus mismatch");
    return {a - o.a, a_prime - o.a_prime, k - o.k, genus};
}
CartesianClass CartesianClass::operator*(const Rat& c) const {
    return {a * c, a_prime * c, k * c, genus};
}

SymmetricClass SymmetricClass::operator+(const SymmetricClass& o) const {
    if (genus != o.genus) throw GenusMismatchError("symmetric class addition: genus mismatch");
    return {a + o.a, k + o.k, genus};
}
SymmetricClass SymmetricClass::operator-(const SymmetricClass& o) const {
    if (genus != o.genus) throw GenusMismatchError("symmetric class subtraction: genus mismatch");
    return {a - o.a, k - o.k, genus};
}
SymmetricClass SymmetricClass::operator*(const Rat& c) const {
    return {a * c, k * c, genus};
}

CartesianClass diagonal(long long g) { return {Rat(1), Rat(1), Rat(-1), g}; }

CartesianClass hyperelliptic_graph(long long g) {
    if (g != 2) throw std::domain_error("D(i) is the hyperelliptic graph on a genus-2 curve");
    return {Rat(1), Rat(1), Rat(1), g};
}

CartesianClass fiber_E(long long g) { return {Rat(0), Rat(1), Rat(0), g}; }
CartesianClass fiber_F(long long g) { return {Rat(1), Rat(0), Rat(0), g}; }

SymmetricClass fiber_Eprime(long long g) { return {Rat(1), Rat(0), g}; }
SymmetricClass diagonal_prime(long long g) { return {Rat(2), Rat(-2), g}; }
SymmetricClass theta_prime(long long g) { return {Rat(g), Rat(1), g}; }

Rat intersect_cartesian(const CartesianClass& d1, const CartesianClass& d2) {
    if (d1.genus != d2.genus)
        throw GenusMismatchError("intersect_cartesian: classes live on squares of different curves");
    return d1.a * d2.a_prime + d1.a_prime * d2.a - Rat(2 * d1.genus) * d1.k * d2.k;
}

Rat intersect_symmetric(const SymmetricClass& d1, const SymmetricClass& d2) {
    if (d1.genus != d2.genus)
        throw GenusMismatchError("intersect_symmetric: classes live on squares of different curves");
    return d1.a * d2.a - Rat(d1.genus) * d1.k * d2.k;
}

Rat self_intersection(const CartesianClass& d) { return intersect_cartesian(d, d); }
Rat self_intersection(const SymmetricClass& d) { return intersect_symmetric(d, d); }

CartesianClass pullback(const SymmetricClass& d) { return {d.a, d.a, d.k, d.genus}; }

SymmetricClass pushforward_sym_part(const CartesianClass& d) {
    if (!d.is_symmetric())
        throw std::domain_error("pushforward_sym_part: bidegree is asymmetric");
    return {d.a, d.k, d.genus};
}

CartesianClass canonical_cartesian(long long g) {
    if (g < 2) throw std::domain_error("canonical_cartesian: genus must be >= 2");
    return {Rat(2 * g - 2), Rat(2 * g - 2), Rat(0), g};
}

SymmetricClass canonical_symmetric(long long g) {
    if (g < 2) throw std::domain_error("canonical_symmetric: genus must be >= 2");
    return {Rat(2 * g - 3), Rat(1), g};
}

ChernData chern_data(SurfaceKind surface, long long g) {
    if (g < 2) throw std::domain_error("chern_data: genus must be >= 2");
    ChernData cd;
    if (surface == SurfaceKind::cartesian) {
        cd.c1_sq = 2 * (2 * g - 2) * (2 * g - 2);
        cd.c2 = (2 * g - 2) * (2 * g - 2);
        cd.chi = Rat((g - 1) * (g - 1));
    } else {
        cd.c1_sq = 4 * g * g - 13 * g + 9;
        cd.c2 = 2 * g * g - 5 * g + 3;
        cd.chi = Rat((g - 1) * (g - 2), 2);
    }
    // Noether holds by construction; keep the check as a guard on edits.
    if (Rat(12) * cd.chi != Rat(cd.c1_sq + cd.c2))
        throw InconsistencyError("chern_data: Noether identity violated");
    return cd;
}

EFDeltaCoords to_ef_delta(const CartesianClass& d) {
    return {d.a + d.k, d.a_prime + d.k, -d.k};
}

CartesianClass from_ef_delta(const EFDeltaCoords& c, long long g) {
    return {c.e + c.delta, c.f + c.delta, -c.delta, g};
}

NamedClass plane_nodal_tangent_class(long long g, long long d) {
    if (d < 4 || 2 * g > (d - 1) * (d - 2))
        throw std::domain_error("plane_nodal_tangent_class: no nodal plane curve of this (g,d)");
    CartesianClass core{Rat((d - 3) * (d + g - 2)), Rat((d - 3) * (d + g - 2)),
                        Rat(d + g - 4), g};
    return {"B_plane_nodal", core, Rat(2), self_intersection(core)};
}

NamedClass osculating_class(long long g) {
    if (g < 3) throw std::domain_error("osculating_class: needs genus >= 3");
    CartesianClass core{Rat(g * g - g - 1), Rat(g * g - g - 1), Rat(g), g};
    return {"B_osculating", core, Rat((g - 1) * (g - 2)), self_intersection(core)};
}

std::vector<NamedClass> named_correspondences(long long g, std::optional<long long> d) {
    if (g < 2) throw std::domain_error("named_correspondences: genus must be >= 2");
    std::vector<NamedClass> out;
    CartesianClass delta = diagonal(g);
    out.push_back({"Delta", delta, Rat(1), self_intersection(delta)});
    if (g == 2) {
        CartesianClass di = hyperelliptic_graph(g);
        out.push_back({"D(i)", di, Rat(1), self_intersection(di)});
    }
    if (g == 3) {
        CartesianClass b{Rat(10), Rat(10), Rat(6), g};
        CartesianClass t{Rat(2), Rat(10), Rat(2), g};
        CartesianClass tinv{Rat(10), Rat(2), Rat(2), g};
        CartesianClass gcls{Rat(3), Rat(3), Rat(1), g};
        if (!((t + tinv) * Rat(1, 4) == gcls))
            throw InconsistencyError("named_correspondences: G != (T + T^-1)/4");
        out.push_back({"B", b, Rat(1), self_intersection(b)});
        out.push_back({"T", t, Rat(1), self_intersection(t)});
        out.push_back({"T^-1", tinv, Rat(1), self_intersection(tinv)});
        out.push_back({"G", gcls, Rat(1), self_intersection(gcls)});
    }
    if (d) {
        out.push_back(plane_nodal_tangent_class(g, *d));
    }
    if (g >= 3) {
        out.push_back(osculating_class(g));
    }
    return out;
}

}  // namespace squarefold::lattice
