#include <doctest.h>

#include <random>

#include "squarefold/lattice.hpp"

using namespace squarefold;
using namespace squarefold::lattice;

namespace {

CartesianClass random_cartesian(std::mt19937& rng, long long g) {
    std::uniform_int_distribution<long long> num(-48, 48);
    std::uniform_int_distribution<long long> den(1, 4);
    return {Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), g};
}

SymmetricClass random_symmetric(std::mt19937& rng, long long g) {
    std::uniform_int_distribution<long long> num(-48, 48);
    std::uniform_int_distribution<long long> den(1, 4);
    return {Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), g};
}

}  // namespace

TEST_CASE("pairing is symmetric and bilinear on random rational classes") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> genus(2, 9);
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 4);
    for (int i = 0; i < 1000; ++i) {
        const long long g = genus(rng);
        const auto x = random_cartesian(rng, g);
        const auto y = random_cartesian(rng, g);
        const auto z = random_cartesian(rng, g);
        const Rat c(num(rng), den(rng));
        CHECK(intersect_cartesian(x, y) == intersect_cartesian(y, x));
        CHECK(intersect_cartesian(x + y, z) ==
              intersect_cartesian(x, z) + intersect_cartesian(y, z));
        CHECK(intersect_cartesian(x * c, y) == c * intersect_cartesian(x, y));

        const auto sx = random_symmetric(rng, g);
        const auto sy = random_symmetric(rng, g);
        const auto sz = random_symmetric(rng, g);
        CHECK(intersect_symmetric(sx, sy) == intersect_symmetric(sy, sx));
        CHECK(intersect_symmetric(sx + sy, sz) ==
              intersect_symmetric(sx, sz) + intersect_symmetric(sy, sz));
        CHECK(intersect_symmetric(sx * c, sy) == c * intersect_symmetric(sx, sy));
    }
}

TEST_CASE("pullback doubles the pairing") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long long g = 2 + i % 8;
        const auto x = random_symmetric(rng, g);
        const auto y = random_symmetric(rng, g);
        CHECK(intersect_cartesian(pullback(x), pullback(y)) ==
              Rat(2) * intersect_symmetric(x, y));
        CHECK(pushforward_sym_part(pullback(x)) == x);
    }
}

TEST_CASE("distinguished classes") {
    for (long long g = 2; g <= 12; ++g) {
        CHECK(self_intersection(diagonal(g)) == Rat(2 - 2 * g));
        CHECK(intersect_cartesian(fiber_E(g), fiber_F(g)) == Rat(1));
        CHECK(self_intersection(fiber_E(g)) == Rat(0));
        CHECK(self_intersection(theta_prime(g)) == Rat(g * (g - 1)));
        // Delta' = 2 D'_{1,-1} has square -4(g-1) (branch divisor, halved
        // pairing relative to the diagonal upstairs).
        CHECK(self_intersection(diagonal_prime(g)) == Rat(4 - 4 * g));
        CHECK(pullback(canonical_symmetric(g)) + diagonal(g) == canonical_cartesian(g));
    }
    CHECK(self_intersection(hyperelliptic_graph(2)) == Rat(-2));
    CHECK_THROWS_AS(hyperelliptic_graph(3), std::domain_error);
}

TEST_CASE("Noether identity for both surfaces, genus 2..20") {
    for (long long g = 2; g <= 20; ++g) {
        for (auto kind : {SurfaceKind::cartesian, SurfaceKind::symmetric}) {
            const auto cd = chern_data(kind, g);
            CHECK(Rat(12) * cd.chi == Rat(cd.c1_sq + cd.c2));
        }
        CHECK(chern_data(SurfaceKind::cartesian, g).chi == Rat((g - 1) * (g - 1)));
        CHECK(chern_data(SurfaceKind::symmetric, g).chi == Rat((g - 1) * (g - 2), 2));
    }
}

TEST_CASE("basis conversion round-trips") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        const long long g = 2 + i % 5;
        const auto x = random_cartesian(rng, g);
        CHECK(from_ef_delta(to_ef_delta(x), g) == x);
    }
    const auto c = to_ef_delta(diagonal(4));
    CHECK(c.e == Rat(0));
    CHECK(c.f == Rat(0));
    CHECK(c.delta == Rat(1));
}

TEST_CASE("named correspondences") {
    const auto g2 = named_correspondences(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].name == "Delta");
    CHECK(g2[1].name == "D(i)");

    const auto g3 = named_correspondences(3);
    REQUIRE(g3.size() == 6);
    CHECK(g3[1].name == "B");
    CHECK(g3[1].self_intersection == Rat(-16));
    CHECK(g3[2].cls + g3[3].cls == g3[4].cls * Rat(4));  // T + T^-1 = 4G
    CHECK(g3[5].name == "B_osculating");
    CHECK(g3[5].coefficient == Rat(2));  // (g-1)(g-2) at g = 3

    // Plane-nodal tangent correspondence at (g,d) = (3,4) recovers B.
    const auto bn = plane_nodal_tangent_class(3, 4);
    const CartesianClass half_b{Rat(5), Rat(5), Rat(3), 3};
    CHECK(bn.cls == half_b);
    CHECK(bn.cls * bn.coefficient == g3[1].cls);
    CHECK_THROWS_AS(plane_nodal_tangent_class(6, 4), std::domain_error);

    // The osculating core has positive square from genus 4 on.
    for (long long g = 4; g <= 8; ++g)
        CHECK(osculating_class(g).self_intersection > Rat(0));
}

TEST_CASE("curve profile validation") {
    CHECK_THROWS_AS(CurveProfile::make(1), std::domain_error);
    CHECK_THROWS_AS(CurveProfile::make(2, false, TriState::no), std::domain_error);
    CHECK_THROWS_AS(CurveProfile::make(5, true, TriState::yes), std::domain_error);
    const auto p = CurveProfile::make(5, true);
    CHECK(p.hyperelliptic == TriState::no);
    CHECK(p.bielliptic == TriState::no);
    CHECK(CurveProfile::make(2).hyperelliptic == TriState::yes);
}

TEST_CASE("genus mismatch is rejected") {
    CHECK_THROWS_AS(intersect_cartesian(diagonal(2), diagonal(3)), GenusMismatchError);
    CHECK_THROWS_AS(diagonal(2) + diagonal(3), GenusMismatchError);
}
