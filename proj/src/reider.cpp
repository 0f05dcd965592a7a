#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "squarefold/cones.hpp"
#include "squarefold/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace squarefold::cones {

const char* to_string(ReiderMode m) {
    return m == ReiderMode::globally_generated ? "globally_generated" : "very_ample";
}

const char* to_string(ReiderCondition c) {
    switch (c) {
        case ReiderCondition::i: return "i";
        case ReiderCondition::ii: return "ii";
        case ReiderCondition::i_prime: return "i'";
        case ReiderCondition::ii_prime: return "ii'";
        default: return "iii'";
    }
}

namespace {

/// For a given L.Gamma value, the condition it can trigger and the
/// minimal Gamma^2 it requires. The index bound Gamma^2 <= (Gamma_Sigma)^2
/// turns the exact Gamma^2 requirement into a one-sided test on the
/// lattice part, so candidates are over-reported.
struct ConditionSlot {
    long long l_dot;
    ReiderCondition condition;
    long long min_gamma_sq;
};

std::vector<ConditionSlot> slots(ReiderMode mode) {
    if (mode == ReiderMode::globally_generated)
        return {{0, ReiderCondition::i, -1}, {1, ReiderCondition::ii, 0}};
    return {{0, ReiderCondition::i_prime, -2},
            {1, ReiderCondition::ii_prime, -1},
            {2, ReiderCondition::iii_prime, 0}};
}

/// Exact-match check for the explicitly added classes (the window
/// exceptions), whose self-intersection is known exactly.
std::optional<ReiderCondition> exact_condition(ReiderMode mode, const Rat& l_dot,
                                               const Rat& gamma_sq) {
    if (mode == ReiderMode::globally_generated) {
        if (l_dot == Rat(0) && gamma_sq == Rat(-1)) return ReiderCondition::i;
        if (l_dot == Rat(1) && gamma_sq == Rat(0)) return ReiderCondition::ii;
        return std::nullopt;
    }
    if (l_dot == Rat(0) && (gamma_sq == Rat(-1) || gamma_sq == Rat(-2)))
        return ReiderCondition::i_prime;
    if (l_dot == Rat(1) && (gamma_sq == Rat(-1) || gamma_sq == Rat(0)))
        return ReiderCondition::ii_prime;
    if (l_dot == Rat(2) && gamma_sq == Rat(0)) return ReiderCondition::iii_prime;
    return std::nullopt;
}

void append_exact(std::vector<ObstructionCandidate>& out, ReiderMode mode,
                  const CartesianClass& gamma, const CartesianClass& L) {
    const Rat l_dot = lattice::intersect_cartesian(L, gamma);
    const Rat gsq = lattice::self_intersection(gamma);
    if (auto cond = exact_condition(mode, l_dot, gsq))
        out.push_back({gamma, *cond, l_dot, gsq});
}

/// Candidates at a fixed lattice-part size s = c + c' for a symmetric
/// integral L = D_{p,p,q} on the square of a genus-2 curve. The inner loop
/// runs in scaled integers: l4 = 4l, so Gamma^2 * 4 = 8cc' - l4^2 and
/// L.Gamma = p*s - q*l4.
void scan_g2_size(std::vector<ObstructionCandidate>& out, long long p, long long q,
                  long long s, const std::vector<ConditionSlot>& want) {
    for (long long c = 0; c <= s; ++c) {
        const long long cp = s - c;
        for (long long l4 = -s; l4 <= s; ++l4) {
            const long long l_dot = p * s - q * l4;
            for (const auto& slot : want) {
                if (l_dot != slot.l_dot) continue;
                const long long gsq4 = 8 * c * cp - l4 * l4;
                if (gsq4 < 4 * slot.min_gamma_sq) continue;
                out.push_back({CartesianClass{Rat(c), Rat(cp), Rat(l4, 4), 2},
                               slot.condition, Rat(l_dot), Rat(gsq4, 4)});
            }
        }
    }
}

/// Same at genus 3: integer valence, window -s/6 <= l <= 5s/18, and
/// L.Gamma = p*s - 6*q*l.
void scan_g3_size(std::vector<ObstructionCandidate>& out, long long p, long long q,
                  long long s, const std::vector<ConditionSlot>& want) {
    for (long long c = 0; c <= s; ++c) {
        const long long cp = s - c;
        for (long long l = -s; l <= s; ++l) {
            if (s + 6 * l < 0 || 18 * l > 5 * s) continue;
            const long long l_dot = p * s - 6 * q * l;
            for (const auto& slot : want) {
                if (l_dot != slot.l_dot) continue;
                const long long gsq = 2 * (c * cp - 3 * l * l);
                if (gsq < slot.min_gamma_sq) continue;
                out.push_back({CartesianClass{Rat(c), Rat(cp), Rat(l), 3},
                               slot.condition, Rat(l_dot), Rat(gsq)});
            }
        }
    }
}

void canonical_sort(std::vector<ObstructionCandidate>& v) {
    auto key = [](const ObstructionCandidate& o) {
        Rat a(0), ap(0), k(0);
        if (const auto* c = std::get_if<CartesianClass>(&o.gamma)) {
            a = c->a;
            ap = c->a_prime;
            k = c->k;
        } else {
            const auto& s = std::get<SymmetricClass>(o.gamma);
            a = s.a;
            ap = s.a;
            k = s.k;
        }
        return std::make_tuple(a + ap, a, k, static_cast<int>(o.condition));
    };
    std::sort(v.begin(), v.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    v.erase(std::unique(v.begin(), v.end(),
                        [&](const auto& x, const auto& y) { return key(x) == key(y); }),
            v.end());
}

void check_cartesian_preconditions(long long g, const CartesianClass& L, ReiderMode mode) {
    if (g != 2 && g != 3)
        throw NotApplicableError("reider_certify: cartesian scan supports genus 2 and 3 only");
    if (L.genus != g) throw GenusMismatchError("reider_certify: class genus mismatch");
    if (!L.is_symmetric() || !L.is_integral())
        throw NotApplicableError("reider_certify: L must be an integral symmetric class");
    const long long a = as_integer(L.a), k = as_integer(L.k);
    const bool nef = (g == 2) ? (2 * std::abs(k) <= a)
                              : (a + 3 * k >= 0 && 9 * k <= 5 * a);
    if (!nef) throw NotApplicableError("reider_certify: L is not nef");
    const long long L2 = 2 * (a * a - g * k * k);
    const long long need = mode == ReiderMode::globally_generated ? 5 : 10;
    if (L2 < need)
        throw NotApplicableError("reider_certify: L^2 = " + std::to_string(L2) +
                                 " below the threshold " + std::to_string(need));
}

}  // namespace

namespace detail {

std::vector<ObstructionCandidate> scan_cartesian_serial(long long g, const CartesianClass& L,
                                                        ReiderMode mode, long long cap) {
    const long long p = as_integer(L.a), q = as_integer(L.k);
    const auto want = slots(mode);
    std::vector<ObstructionCandidate> out;
    for (long long s = 1; s <= cap; ++s) {
        if (g == 2)
            scan_g2_size(out, p, q, s, want);
        else
            scan_g3_size(out, p, q, s, want);
    }
    if (g == 2) {
        append_exact(out, mode, lattice::diagonal(2), L);
        append_exact(out, mode, lattice::hyperelliptic_graph(2), L);
    } else {
        append_exact(out, mode, lattice::diagonal(3), L);
        append_exact(out, mode, CartesianClass{Rat(10), Rat(10), Rat(6), 3}, L);
    }
    canonical_sort(out);
    return out;
}

std::vector<ObstructionCandidate> scan_cartesian_parallel(long long g, const CartesianClass& L,
                                                          ReiderMode mode, long long cap) {
    const long long p = as_integer(L.a), q = as_integer(L.k);
    const auto want = slots(mode);
    std::vector<std::vector<ObstructionCandidate>> per_size(static_cast<size_t>(cap) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long s = 1; s <= cap; ++s) {
        if (g == 2)
            scan_g2_size(per_size[static_cast<size_t>(s)], p, q, s, want);
        else
            scan_g3_size(per_size[static_cast<size_t>(s)], p, q, s, want);
    }
    std::vector<ObstructionCandidate> out;
    for (auto& chunk : per_size)
        out.insert(out.end(), chunk.begin(), chunk.end());
    if (g == 2) {
        append_exact(out, mode, lattice::diagonal(2), L);
        append_exact(out, mode, lattice::hyperelliptic_graph(2), L);
    } else {
        append_exact(out, mode, lattice::diagonal(3), L);
        append_exact(out, mode, CartesianClass{Rat(10), Rat(10), Rat(6), 3}, L);
    }
    canonical_sort(out);
    return out;
}

std::vector<ObstructionCandidate> scan_symmetric_serial(long long g, const SymmetricClass& L,
                                                        ReiderMode mode, long long cap) {
    const auto want = slots(mode);
    const auto cd = kouvidakis_cones(g);
    std::vector<ObstructionCandidate> out;
    for (long long c = 1; c <= cap; ++c) {
        for (long long l = -c; l <= c; ++l) {
            // Outer effective window: sound for over-reporting.
            if (cmp_slope(Rat(l), Rat(c), cd.eff_outer.lower, g) < 0 ||
                cmp_slope(Rat(l), Rat(c), cd.eff_outer.upper, g) > 0)
                continue;
            const Rat l_dot = L.a * Rat(c) - Rat(g) * L.k * Rat(l);
            for (const auto& slot : want) {
                if (l_dot != Rat(slot.l_dot)) continue;
                const long long gsq = c * c - g * l * l;
                if (gsq < slot.min_gamma_sq) continue;
                out.push_back({SymmetricClass{Rat(c), Rat(l), g}, slot.condition, l_dot,
                               Rat(gsq)});
            }
        }
    }
    canonical_sort(out);
    return out;
}

}  // namespace detail

ReiderResult reider_certify(long long g, const CartesianClass& L, ReiderMode mode,
                            long long cap) {
    if (cap < 1) throw std::domain_error("reider_certify: cap must be positive");
    check_cartesian_preconditions(g, L, mode);
    ReiderResult r;
    r.cap = cap;
    r.mode = mode;
    r.obstructions = detail::scan_cartesian_parallel(g, L, mode, cap);
    r.certified_within_cap = r.obstructions.empty();
    return r;
}

ReiderResult reider_certify(long long g, const SymmetricClass& L, ReiderMode mode,
                            long long cap) {
    if (cap < 1) throw std::domain_error("reider_certify: cap must be positive");
    if (L.genus != g) throw GenusMismatchError("reider_certify: class genus mismatch");
    if (!L.is_integral())
        throw NotApplicableError("reider_certify: L must be an integral class");
    if (nef_symmetric(g, L.a, L.k) != TriState::yes)
        throw NotApplicableError("reider_certify: L is not certifiably nef");
    const Rat L2 = lattice::self_intersection(L);
    const Rat need(mode == ReiderMode::globally_generated ? 5 : 10);
    if (L2 < need)
        throw NotApplicableError("reider_certify: L^2 = " + squarefold::to_string(L2) +
                                 " below the threshold " + squarefold::to_string(need));
    ReiderResult r;
    r.cap = cap;
    r.mode = mode;
    r.obstructions = detail::scan_symmetric_serial(g, L, mode, cap);
    r.certified_within_cap = r.obstructions.empty();
    return r;
}

}  // namespace squarefold::cones
