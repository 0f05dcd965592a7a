#include "squarefold/cones.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace squarefold::cones {

const char* to_string(Property p) {
    switch (p) {
        case Property::quasi_effective: return "quasi_effective";
        case Property::nef: return "nef";
        case Property::big: return "big";
        case Property::ample: return "ample";
        case Property::globally_generated: return "globally_generated";
        case Property::very_ample: return "very_ample";
        default: return "non_special";
    }
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

Verdict verdict_for(const VerdictList& list, Property p) {
    for (const auto& v : list)
        if (v.property == p) return v.verdict;
    return Verdict::unknown;
}

namespace {

PositivityVerdict* find(VerdictList& list, Property p) {
    for (auto& v : list)
        if (v.property == p) return &v;
    return nullptr;
}

void set(VerdictList& list, Property p, Verdict v, std::string why) {
    if (auto* e = find(list, p)) {
        e->verdict = v;
        e->provenance = std::move(why);
    } else {
        list.push_back({p, v, std::move(why)});
    }
}

void imply_yes(VerdictList& list, Property p, const char* from) {
    auto* e = find(list, p);
    if (!e || e->verdict != Verdict::yes)
        set(list, p, Verdict::yes, std::string("implied by ") + from);
}

void imply_no(VerdictList& list, Property p, const char* from) {
    auto* e = find(list, p);
    if (!e || e->verdict != Verdict::no)
        set(list, p, Verdict::no, std::string("excluded by ") + from);
}

/// Post-hoc logical closure over the standard implication chain.
void enforce_closure(VerdictList& list) {
    for (int pass = 0; pass < 2; ++pass) {
        if (verdict_for(list, Property::very_ample) == Verdict::yes) {
            imply_yes(list, Property::ample, "very ample");
            imply_yes(list, Property::globally_generated, "very ample");
        }
        if (verdict_for(list, Property::ample) == Verdict::yes)
            imply_yes(list, Property::nef, "ample");
        if (verdict_for(list, Property::globally_generated) == Verdict::yes)
            imply_yes(list, Property::nef, "global generation");
        if (verdict_for(list, Property::nef) == Verdict::yes)
            imply_yes(list, Property::quasi_effective, "nef");

        if (verdict_for(list, Property::quasi_effective) == Verdict::no) {
            imply_no(list, Property::nef, "non-quasi-effectiveness");
            imply_no(list, Property::big, "non-quasi-effectiveness");
        }
        if (verdict_for(list, Property::nef) == Verdict::no) {
            imply_no(list, Property::ample, "non-nefness");
            imply_no(list, Property::globally_generated, "non-nefness");
        }
        if (verdict_for(list, Property::ample) == Verdict::no)
            imply_no(list, Property::very_ample, "non-ampleness");
    }
}

void apply_overlay(VerdictList& list, const KnownFacts& overlay, long long genus,
                   SurfaceKind kind, long long a, std::optional<long long> a_prime,
                   long long k) {
    for (auto& v : list) {
        if (v.verdict != Verdict::unknown) continue;
        if (auto fact = overlay.lookup(genus, kind, a, a_prime, k, v.property)) {
            v.verdict = fact->verdict;
            v.provenance = "known fact: " + fact->citation;
        }
    }
}

}  // namespace

// -- known facts -------------------------------------------------------------

KnownFacts KnownFacts::parse(const std::string& text) {
    KnownFacts kf;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        KnownFact f;
        std::string kind, aprime, prop, verdict;
        if (!(ls >> f.genus)) continue;  // blank or comment-only line
        if (!(ls >> kind >> f.a >> aprime >> f.k >> prop >> verdict))
            throw std::runtime_error("known-facts overlay: malformed line " +
                                     std::to_string(lineno));
        if (kind == "cartesian")
            f.kind = SurfaceKind::cartesian;
        else if (kind == "symmetric")
            f.kind = SurfaceKind::symmetric;
        else
            throw std::runtime_error("known-facts overlay: bad surface kind on line " +
                                     std::to_string(lineno));
        if (aprime != "-") f.a_prime = std::stoll(aprime);
        bool found = false;
        for (Property p : {Property::quasi_effective, Property::nef, Property::big,
                           Property::ample, Property::globally_generated,
                           Property::very_ample, Property::non_special})
            if (prop == to_string(p)) {
                f.property = p;
                found = true;
            }
        if (!found)
            throw std::runtime_error("known-facts overlay: bad property on line " +
                                     std::to_string(lineno));
        if (verdict == "yes")
            f.verdict = Verdict::yes;
        else if (verdict == "no")
            f.verdict = Verdict::no;
        else
            throw std::runtime_error("known-facts overlay: bad verdict on line " +
                                     std::to_string(lineno));
        std::getline(ls, f.citation);
        const auto pos = f.citation.find_first_not_of(" \t");
        f.citation = pos == std::string::npos ? std::string() : f.citation.substr(pos);
        kf.facts.push_back(std::move(f));
    }
    return kf;
}

KnownFacts KnownFacts::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("known-facts overlay: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const KnownFacts& KnownFacts::builtin() {
    static const KnownFacts kf = parse(R"(# genus kind a a' k property verdict citation
3 cartesian 4 4 0 very_ample yes canonical class of the square of a plane quartic; Segre-type embedding of degree 32
3 cartesian 4 4 0 non_special yes canonical class of the square of a plane quartic; Segre-type embedding of degree 32
2 cartesian 5 5 0 very_ample yes product embedding by a degree-5 pencil; image of degree 50
)");
    return kf;
}

std::optional<KnownFact> KnownFacts::lookup(long long genus, SurfaceKind kind, long long a,
                                            std::optional<long long> a_prime, long long k,
                                            Property property) const {
    for (const auto& f : facts)
        if (f.genus == genus && f.kind == kind && f.a == a && f.a_prime == a_prime &&
            f.k == k && f.property == property)
            return f;
    return std::nullopt;
}

// -- genus 2 cartesian -------------------------------------------------------

VerdictList cone_status_cartesian_g2(long long a, const Rat& k) {
    const Rat A(a), K2 = Rat(2) * rabs(k);
    VerdictList out;

    const bool qeff = rabs(k) <= A;
    out.push_back({Property::quasi_effective,
                   qeff ? Verdict::yes : Verdict::no,
                   "genus-2 symmetric cone: quasi-effective iff |k| <= a"});

    const bool nef = K2 <= A;
    out.push_back({Property::nef, nef ? Verdict::yes : Verdict::no,
                   "genus-2 symmetric cone: nef iff 2|k| <= a"});

    const bool big = rabs(k) < A;
    out.push_back({Property::big, big ? Verdict::yes : Verdict::no,
                   "interior of the quasi-effective cone"});

    const bool ample = K2 < A;
    out.push_back({Property::ample, ample ? Verdict::yes : Verdict::no,
                   "interior of the nef cone (equivalently 2|k| <= a-1 for integral classes)"});

    if (!is_integer(k)) {
        const char* why = "fractional class: not a line bundle";
        out.push_back({Property::globally_generated, Verdict::no, why});
        out.push_back({Property::very_ample, Verdict::no, why});
        out.push_back({Property::non_special, Verdict::no, why});
    } else {
        const bool gg_window = (a == 4 && k == Rat(0)) || (a >= 5 && K2 <= A - 2);
        const bool va_window = a >= 5 && K2 <= A - 3;
        out.push_back({Property::globally_generated,
                       gg_window ? Verdict::yes
                                 : (nef ? Verdict::unknown : Verdict::no),
                       gg_window
                           ? "genus-2 adjoint window: (a,k)=(4,0) or a >= 5, 2|k| <= a-2"
                           : (nef ? "outside the sufficient window" : "not nef")});
        out.push_back({Property::very_ample, va_window ? Verdict::yes : Verdict::no,
                       "genus-2 symmetric cone: very ample iff a >= 5 and 2|k| <= a-3"});
        out.push_back({Property::non_special,
                       gg_window ? Verdict::yes : Verdict::unknown,
                       gg_window ? "vanishing for the nef part of the adjoint splitting"
                                 : "no vanishing clause applies"});
    }
    enforce_closure(out);
    return out;
}

VerdictList necessary_conditions_g2_bidegree(long long a, long long a_prime, long long k) {
    VerdictList out;
    const bool ample_nec = 2 * k * k < a * a_prime && 4 * std::abs(k) <= a + a_prime - 1;
    out.push_back({Property::ample, ample_nec ? Verdict::unknown : Verdict::no,
                   ample_nec ? "necessary conditions hold; no sufficient test for "
                               "asymmetric bidegree"
                             : "fails 2k^2 < aa' or 4|k| <= a+a'-1"});
    const bool va_nec = a >= 5 && a_prime >= 5 && 4 * std::abs(k) <= a + a_prime - 5;
    out.push_back({Property::very_ample,
                   (va_nec && ample_nec) ? Verdict::unknown : Verdict::no,
                   va_nec ? "necessary conditions hold; no sufficient test for "
                            "asymmetric bidegree"
                          : "fails a, a' >= 5 or 4|k| <= a+a'-5"});
    return out;
}

// -- genus 3 cartesian -------------------------------------------------------

VerdictList cone_status_cartesian_g3(long long a, long long k, const KnownFacts& overlay) {
    VerdictList out;
    const bool qeff = -a <= k && 5 * k <= 3 * a;
    out.push_back({Property::quasi_effective, qeff ? Verdict::yes : Verdict::no,
                   "genus-3 symmetric cone: quasi-effective iff -a <= k <= 3a/5"});
    const bool nef = a + 3 * k >= 0 && 9 * k <= 5 * a;
    out.push_back({Property::nef, nef ? Verdict::yes : Verdict::no,
                   "genus-3 symmetric cone: nef iff -a/3 <= k <= 5a/9"});
    const bool big = -a < k && 5 * k < 3 * a;
    out.push_back({Property::big, big ? Verdict::yes : Verdict::no,
                   "interior of the quasi-effective cone"});
    const bool ample = a + 3 * k > 0 && 9 * k < 5 * a;
    out.push_back({Property::ample, ample ? Verdict::yes : Verdict::no,
                   "genus-3 symmetric cone: ample iff -a/3 < k < 5a/9"});

    const bool excluded_pair = (a == 8 && k == 2);
    const bool va_window = a >= 7 && !excluded_pair && 3 * k >= -(a - 4) &&
                           9 * k <= 5 * (a - 4);
    const bool gg_extra = (a == 6 && k == 0) || (a == 8 && k == 2);
    Verdict va = Verdict::unknown;
    std::string va_why = "outside the sufficient window";
    if (va_window) {
        va = Verdict::yes;
        va_why = "genus-3 adjoint window: a >= 7, (a,k) != (8,2), "
                 "-(a-4)/3 <= k <= 5(a-4)/9";
    } else if (!ample) {
        va = Verdict::no;
        va_why = "not ample";
    } else if (excluded_pair) {
        va_why = "excluded pair (8,2): not covered by the adjoint method";
    }
    out.push_back({Property::very_ample, va, va_why});

    Verdict gg = Verdict::unknown;
    std::string gg_why = "outside the sufficient window";
    if (va_window || gg_extra) {
        gg = Verdict::yes;
        gg_why = gg_extra ? "genus-3 adjoint window, extra pairs (6,0) and (8,2)"
                          : "genus-3 adjoint window";
    } else if (!nef) {
        gg = Verdict::no;
        gg_why = "not nef";
    }
    out.push_back({Property::globally_generated, gg, gg_why});

    out.push_back({Property::non_special,
                   (va_window || gg_extra) ? Verdict::yes : Verdict::unknown,
                   (va_window || gg_extra)
                       ? "vanishing for the nef part of the adjoint splitting"
                       : "no vanishing clause applies"});

    apply_overlay(out, overlay, 3, SurfaceKind::cartesian, a, a, k);
    enforce_closure(out);
    return out;
}

// -- symmetric-square cones --------------------------------------------------

ConeDescription kouvidakis_cones(long long g) {
    if (g < 2) throw std::domain_error("kouvidakis_cones: genus must be >= 2");
    ConeDescription cd;
    cd.genus = g;
    const long long s = isqrt(g);
    const bool square = s * s == g;
    if (g == 2) {
        cd.eff_inner = {{Rat(-1), Rat(0)}, {Rat(1), Rat(0)}};
        cd.nef_inner = {{Rat(-1, 2), Rat(0)}, {Rat(1, 2), Rat(0)}};
        cd.eff_outer = cd.eff_inner;
        cd.nef_outer = cd.nef_inner;
        cd.exact = true;
    } else if (g == 3) {
        cd.eff_inner = {{Rat(-1), Rat(0)}, {Rat(3, 5), Rat(0)}};
        cd.nef_inner = {{Rat(-1, 3), Rat(0)}, {Rat(5, 9), Rat(0)}};
        cd.eff_outer = cd.eff_inner;
        cd.nef_outer = cd.nef_inner;
        cd.exact = true;
    } else {
        // Upper slope a/sqrt(g) stored as sqrt(g)/g.
        const RootExpr inv_sqrt{Rat(0), Rat(1, g)};
        cd.eff_inner = {{Rat(-1), Rat(0)}, inv_sqrt};
        cd.nef_outer = {{Rat(-1, g), Rat(0)}, inv_sqrt};
        if (square) {
            cd.eff_outer = cd.eff_inner;
            cd.nef_inner = cd.nef_outer;
            cd.exact = true;
        } else {
            // a/(sqrt(g)-1) = a(sqrt(g)+1)/(g-1).
            cd.eff_outer = {{Rat(-1), Rat(0)}, {Rat(1, g - 1), Rat(1, g - 1)}};
            cd.nef_inner = {{Rat(-1, g), Rat(0)}, {Rat(-1, g), Rat(1, g)}};
            cd.exact = false;
        }
    }
    return cd;
}

int cmp_slope(const Rat& k, const Rat& a, const RootExpr& w, long long g) {
    return cmp_root(k - w.x * a, w.y * a, g);
}

namespace {

/// Membership of (a,k) in the cone spanned by a slope window (plus the
/// origin). strict asks for the interior.
bool in_cone(long long g, const Rat& a, const Rat& k, const SlopeWindow& w, bool strict) {
    if (a < Rat(0)) return false;
    if (a == Rat(0)) return !strict && k == Rat(0);
    const int lo = cmp_slope(k, a, w.lower, g);
    const int hi = cmp_slope(k, a, w.upper, g);
    return strict ? (lo > 0 && hi < 0) : (lo >= 0 && hi <= 0);
}

TriState sandwich(long long g, const Rat& a, const Rat& k, const SlopeWindow& inner,
                  const SlopeWindow& outer, bool strict) {
    if (in_cone(g, a, k, inner, strict)) return TriState::yes;
    if (!in_cone(g, a, k, outer, strict)) return TriState::no;
    return TriState::unknown;
}

}  // namespace

TriState qeff_symmetric(long long g, const Rat& a, const Rat& k) {
    const auto cd = kouvidakis_cones(g);
    return sandwich(g, a, k, cd.eff_inner, cd.eff_outer, false);
}

TriState nef_symmetric(long long g, const Rat& a, const Rat& k) {
    const auto cd = kouvidakis_cones(g);
    return sandwich(g, a, k, cd.nef_inner, cd.nef_outer, false);
}

TriState ample_symmetric(long long g, const Rat& a, const Rat& k) {
    const auto cd = kouvidakis_cones(g);
    return sandwich(g, a, k, cd.nef_inner, cd.nef_outer, true);
}

TriState big_symmetric(long long g, const Rat& a, const Rat& k) {
    const auto cd = kouvidakis_cones(g);
    return sandwich(g, a, k, cd.eff_inner, cd.eff_outer, true);
}

namespace {

Verdict to_verdict(TriState t) {
    switch (t) {
        case TriState::yes: return Verdict::yes;
        case TriState::no: return Verdict::no;
        default: return Verdict::unknown;
    }
}

}  // namespace

VerdictList cone_status_symmetric(long long g, long long a, long long k,
                                  const KnownFacts& overlay) {
    const Rat A(a), K(k);
    VerdictList out;
    const auto cd = kouvidakis_cones(g);
    const std::string tag = cd.exact ? "symmetric-square cone (exact)"
                                     : "symmetric-square cone (inner/outer bound)";
    out.push_back({Property::quasi_effective, to_verdict(qeff_symmetric(g, A, K)), tag});
    out.push_back({Property::nef, to_verdict(nef_symmetric(g, A, K)), tag});
    out.push_back({Property::big, to_verdict(big_symmetric(g, A, K)),
                   "interior of the quasi-effective cone"});
    out.push_back({Property::ample, to_verdict(ample_symmetric(g, A, K)),
                   "interior of the nef cone"});

    Verdict gg = Verdict::unknown, va = Verdict::unknown, ns = Verdict::unknown;
    std::string gg_why = "outside the sufficient window",
                va_why = "outside the sufficient window",
                ns_why = "no vanishing clause applies";

    if (g == 2) {
        const long long t = 2 * (k - 1);
        const bool gg_window = a >= 4 && std::abs(t) <= a - 2;
        const bool va_window = a >= 5 && std::abs(t) <= a - 3;
        const bool va_necessary = a >= 5 && 1 - a <= t && t <= a - 3;
        if (gg_window) {
            gg = ns = Verdict::yes;
            gg_why = ns_why = "genus-2 adjoint window: a >= 4, 2|k-1| <= a-2";
        }
        if (va_window) {
            va = Verdict::yes;
            va_why = "genus-2 adjoint window: a >= 5, 2|k-1| <= a-3";
        } else if (!va_necessary) {
            va = Verdict::no;
            va_why = "fails a >= 5 or 1-a <= 2(k-1) <= a-3";
        }
    } else if (g == 3) {
        const long long t = 3 * (k - 1);
        const bool gg_window =
            a >= 6 && !(a == 7 && k == 3) && 3 - a <= t && 3 * t <= 5 * a - 15;
        const bool va_window = a >= 7 && !(a == 7 && k == 3) && !(a == 9 && k == 4) &&
                               4 - a <= t && 3 * t <= 5 * a - 16;
        const bool va_necessary = a >= 4 && -1 - a <= t && 3 * t <= 5 * a - 11;
        if (gg_window) {
            gg = ns = Verdict::yes;
            gg_why = ns_why =
                "genus-3 adjoint window: a >= 6, (a,k) != (7,3), 3-a <= 3(k-1) <= 5a/3-5";
        }
        if (va_window) {
            va = Verdict::yes;
            va_why = "genus-3 adjoint window: a >= 7, (a,k) not in {(7,3),(9,4)}, "
                     "4-a <= 3(k-1) <= (5a-16)/3";
        } else if (!va_necessary) {
            va = Verdict::no;
            va_why = "fails a >= 4 or -1-a <= 3(k-1) <= (5a-11)/3";
        } else if ((a == 7 && k == 3) || (a == 9 && k == 4)) {
            va_why = "excluded pair: not covered by the adjoint method";
        }
    } else if (g == 4) {
        const bool gg_window = a >= 8 && 9 - a <= 4 * k && 4 * k <= 2 * a - 8;
        const bool va_window = a >= 9 && 9 - a <= 4 * k && 4 * k <= 2 * a - 10;
        const bool va_necessary = a >= 6 && 3 - a <= 4 * k && 4 * k <= 2 * a - 6;
        if (gg_window) {
            gg = ns = Verdict::yes;
            gg_why = ns_why = "genus-4 adjoint window: a >= 8, 9-a <= 4k <= 2a-8";
        }
        if (va_window) {
            va = Verdict::yes;
            va_why = "genus-4 adjoint window: a >= 9, 9-a <= 4k <= 2a-10";
        } else if (!va_necessary) {
            va = Verdict::no;
            va_why = "fails a >= 6 or 3-a <= 4k <= 2a-6";
        }
    } else {
        gg_why = va_why = ns_why = "Kouvidakis only";
    }

    out.push_back({Property::globally_generated, gg, gg_why});
    out.push_back({Property::very_ample, va, va_why});
    out.push_back({Property::non_special, ns, ns_why});

    // Canonical-type class on the symmetric square of a non-hyperelliptic
    // curve: very ample for g >= 3 regardless of the adjoint windows.
    if (g >= 3 && a == 2 * g - 2 && k == 0) {
        auto* e = find(out, Property::very_ample);
        if (e->verdict == Verdict::unknown) {
            e->verdict = Verdict::yes;
            e->provenance =
                "known fact: very ample canonical-type class on the symmetric "
                "square of a non-hyperelliptic curve";
        }
    }

    apply_overlay(out, overlay, g, SurfaceKind::symmetric, a, std::nullopt, k);
    enforce_closure(out);
    return out;
}

}  // namespace squarefold::cones
