#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "squarefold/lattice.hpp"

namespace squarefold::cones {

using lattice::CartesianClass;
using lattice::SurfaceKind;
using lattice::SymmetricClass;
using lattice::TriState;

enum class Property {
    quasi_effective,
    nef,
    big,
    ample,
    globally_generated,
    very_ample,
    non_special
};

enum class Verdict { yes, no, unknown };

const char* to_string(Property p);
const char* to_string(Verdict v);

/// One property verdict with a human-readable provenance describing which
/// window or fact decided it.
struct PositivityVerdict {
    Property property = Property::quasi_effective;
    Verdict verdict = Verdict::unknown;
    std::string provenance;
};

using VerdictList = std::vector<PositivityVerdict>;

/// Looks a property up in a verdict list; unknown if absent.
Verdict verdict_for(const VerdictList& list, Property p);

// -- known-facts overlay -----------------------------------------------------

/// A single curated fact: a class proven to have a property by an explicit
/// construction rather than by a cone window.
struct KnownFact {
    long long genus = 0;
    SurfaceKind kind = SurfaceKind::cartesian;
    long long a = 0;
    std::optional<long long> a_prime;  // empty for symmetric classes
    long long k = 0;
    Property property = Property::very_ample;
    Verdict verdict = Verdict::yes;
    std::string citation;
};

/// Line-oriented overlay table. Format per line (whitespace separated):
///   genus kind a a'|- k property verdict citation...
/// '#' starts a comment; blank lines are skipped.
struct KnownFacts {
    std::vector<KnownFact> facts;

    static KnownFacts parse(const std::string& text);
    static KnownFacts load_file(const std::string& path);
    /// The overlay shipped with the library (also available as a data file).
    static const KnownFacts& builtin();

    std::optional<KnownFact> lookup(long long genus, SurfaceKind kind, long long a,
                                    std::optional<long long> a_prime, long long k,
                                    Property property) const;
};

// -- cartesian cone verdicts -------------------------------------------------

/// Symmetric class D_{a,a,k} on the square of an arbitrary genus-2 curve.
/// Quarter-integer valence is accepted; the integrality-dependent
/// properties (globally generated, very ample, non-special) are reported
/// as no for fractional classes.
VerdictList cone_status_cartesian_g2(long long a, const Rat& k);

/// Necessary conditions for ampleness / very ampleness of a genus-2
/// bidegree class D_{a,a',k}; verdicts are no or unknown only.
VerdictList necessary_conditions_g2_bidegree(long long a, long long a_prime, long long k);

/// Symmetric class D_{a,a,k} on the square of a generic non-hyperelliptic
/// genus-3 curve (Neron-Severi group generated by E, F, Delta).
VerdictList cone_status_cartesian_g3(long long a, long long k,
                                     const KnownFacts& overlay = KnownFacts::builtin());

// -- symmetric-square cones --------------------------------------------------

/// A value x + y*sqrt(g); used for the irrational cone slopes.
struct RootExpr {
    Rat x, y;
};

/// Closed slope window [lower, upper] for the valence-to-degree ratio k/a.
struct SlopeWindow {
    RootExpr lower, upper;
};

/// Inner and outer approximations of the effective and nef cones of the
/// symmetric square of a generic curve. exact means inner == outer
/// (g = 2, 3 or a perfect square).
struct ConeDescription {
    long long genus = 2;
    SlopeWindow eff_inner, eff_outer;
    SlopeWindow nef_inner, nef_outer;
    bool exact = false;
};

ConeDescription kouvidakis_cones(long long g);

/// Sign of k - w*a where w = x + y*sqrt(g); exact.
int cmp_slope(const Rat& k, const Rat& a, const RootExpr& w, long long g);

/// Tri-state cone memberships for D'_{a,k}; definitive when the cone
/// description is exact, otherwise unknown in the inner/outer gap.
TriState qeff_symmetric(long long g, const Rat& a, const Rat& k);
TriState nef_symmetric(long long g, const Rat& a, const Rat& k);
TriState ample_symmetric(long long g, const Rat& a, const Rat& k);
TriState big_symmetric(long long g, const Rat& a, const Rat& k);

/// Full verdict list for an integral class D'_{a,k} on the symmetric
/// square of a generic curve. Global generation / very ampleness windows
/// exist for g = 2, 3, 4; other genera get cone memberships only.
VerdictList cone_status_symmetric(long long g, long long a, long long k,
                                  const KnownFacts& overlay = KnownFacts::builtin());

// -- Reider certification ----------------------------------------------------

enum class ReiderMode { globally_generated, very_ample };
enum class ReiderCondition { i, ii, i_prime, ii_prime, iii_prime };

const char* to_string(ReiderMode m);
const char* to_string(ReiderCondition c);

/// A candidate effective class that could not be ruled out. gamma is the
/// lattice part of the hypothetical obstruction; gamma_sq is its
/// self-intersection, an upper bound for the actual obstruction's.
struct ObstructionCandidate {
    std::variant<CartesianClass, SymmetricClass> gamma;
    ReiderCondition condition = ReiderCondition::i;
    Rat L_dot_gamma;
    Rat gamma_sq;
};

struct ReiderResult {
    bool certified_within_cap = false;
    long long cap = 0;
    ReiderMode mode = ReiderMode::very_ample;
    std::vector<ObstructionCandidate> obstructions;
};

inline constexpr long long kDefaultReiderCap = 64;

/// Enumerates potential Reider obstructions for the adjoint bundle K + L
/// on a cartesian square (genus 2, arbitrary curve, or genus 3, generic
/// curve). L must be a nef symmetric integral class with L^2 >= 5
/// (globally generated mode) or >= 10 (very ample mode). An empty
/// obstruction list certifies the property within the cap; candidates are
/// over-reported (self-intersection relaxed by the index bound), never
/// under-reported.
ReiderResult reider_certify(long long g, const CartesianClass& L, ReiderMode mode,
                            long long cap = kDefaultReiderCap);

/// Same on a symmetric square (generic curve, g = 2, 3 or 4).
ReiderResult reider_certify(long long g, const SymmetricClass& L, ReiderMode mode,
                            long long cap = kDefaultReiderCap);

/// Serial reference enumerations used by the tests and the benchmark; the
/// public entry points may run the same scan with OpenMP.
namespace detail {
std::vector<ObstructionCandidate> scan_cartesian_serial(long long g, const CartesianClass& L,
                                                        ReiderMode mode, long long cap);
std::vector<ObstructionCandidate> scan_cartesian_parallel(long long g, const CartesianClass& L,
                                                          ReiderMode mode, long long cap);
std::vector<ObstructionCandidate> scan_symmetric_serial(long long g, const SymmetricClass& L,
                                                        ReiderMode mode, long long cap);
}  // namespace detail

}  // namespace squarefold::cones
