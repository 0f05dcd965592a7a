#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "squarefold/cones.hpp"
#include "squarefold/errors.hpp"
#include "squarefold/golden.hpp"
#include "squarefold/hyperbolicity.hpp"
#include "squarefold/invariants.hpp"
#include "squarefold/report.hpp"
#include "squarefold/search.hpp"

namespace {

using squarefold::Rat;
using squarefold::cones::KnownFacts;
using squarefold::lattice::CartesianClass;
using squarefold::lattice::CurveProfile;
using squarefold::lattice::SurfaceKind;
using squarefold::lattice::SymmetricClass;
using squarefold::report::Format;
using squarefold::report::Json;
using squarefold::report::ReportEnvelope;
using squarefold::report::Status;

struct CommonArgs {
    std::string surface = "cartesian";
    long long genus = 2;
    long long a = 0;
    std::optional<long long> a2;
    long long k = 0;
};

SurfaceKind surface_kind(const std::string& s) {
    if (s == "cartesian") return SurfaceKind::cartesian;
    if (s == "symmetric") return SurfaceKind::symmetric;
    throw std::invalid_argument("unknown surface kind: " + s);
}

/// --cap beats SQUAREFOLD_CAP beats the built-in default.
long long resolve_cap(const std::optional<long long>& flag, long long fallback) {
    if (flag) {
        if (*flag < 1) throw std::invalid_argument("--cap must be a positive integer");
        return *flag;
    }
    if (const char* env = std::getenv("SQUAREFOLD_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw std::invalid_argument("SQUAREFOLD_CAP must be a positive integer");
        return v;
    }
    return fallback;
}

void emit(const ReportEnvelope& env, Format format, const std::string& out_path) {
    const std::string text = env.render(format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << text;
    }
}

Json common_inputs(const CommonArgs& c) {
    Json j;
    j["surface"] = c.surface;
    j["genus"] = c.genus;
    j["a"] = c.a;
    if (c.a2) j["a2"] = *c.a2;
    j["k"] = c.k;
    return j;
}

ReportEnvelope run_invariants(const CommonArgs& c) {
    ReportEnvelope env;
    env.command = "invariants";
    env.inputs = common_inputs(c);
    squarefold::invariants::ProjectionInvariants pi;
    if (surface_kind(c.surface) == SurfaceKind::cartesian) {
        const CartesianClass cls{Rat(c.a), Rat(c.a2.value_or(c.a)), Rat(c.k), c.genus};
        pi = squarefold::invariants::cartesian_profile(c.genus, cls);
    } else {
        if (c.a2) throw std::invalid_argument("--a2 is only meaningful for --surface cartesian");
        pi = squarefold::invariants::symmetric_profile(c.genus,
                                                       SymmetricClass{Rat(c.a), Rat(c.k), c.genus});
    }
    env.outputs = squarefold::report::json_of(pi);
    env.citations = {
        "n: self-intersection of the embedding class",
        "g_H: adjunction on a hyperplane section",
        "d_dcurve: double-point formula for a generic projection to P^3",
        "g_dcurve: genus of the double curve from the projection relations",
        "pinch: pinch-point count of the projected surface",
        "triple: triple-point count of the projected surface",
        "double_pts_P4: double points of a further generic projection to P^4",
    };
    return env;
}

ReportEnvelope run_cone(const CommonArgs& c, const std::string& facts_path) {
    ReportEnvelope env;
    env.command = "cone";
    env.inputs = common_inputs(c);
    const KnownFacts overlay =
        facts_path.empty() ? KnownFacts::builtin() : KnownFacts::load_file(facts_path);
    squarefold::cones::VerdictList verdicts;
    if (surface_kind(c.surface) == SurfaceKind::cartesian) {
        const long long a2 = c.a2.value_or(c.a);
        if (a2 != c.a) {
            if (c.genus != 2)
                throw squarefold::NotApplicableError(
                    "asymmetric bidegree tests exist for genus 2 only");
            verdicts = squarefold::cones::necessary_conditions_g2_bidegree(c.a, a2, c.k);
        } else if (c.genus == 2) {
            verdicts = squarefold::cones::cone_status_cartesian_g2(c.a, Rat(c.k));
        } else if (c.genus == 3) {
            verdicts = squarefold::cones::cone_status_cartesian_g3(c.a, c.k, overlay);
        } else {
            throw squarefold::NotApplicableError(
                "cartesian cone verdicts cover genus 2 and 3");
        }
    } else {
        verdicts = squarefold::cones::cone_status_symmetric(c.genus, c.a, c.k, overlay);
    }
    env.outputs["verdicts"] = squarefold::report::json_of(verdicts);
    for (const auto& v : verdicts) env.citations.push_back(v.provenance);
    return env;
}

ReportEnvelope run_reider(const CommonArgs& c, const std::string& mode_name,
                          const std::optional<long long>& cap_flag) {
    ReportEnvelope env;
    env.command = "reider";
    env.inputs = common_inputs(c);
    env.inputs["mode"] = mode_name;
    squarefold::cones::ReiderMode mode;
    if (mode_name == "gg" || mode_name == "globally_generated")
        mode = squarefold::cones::ReiderMode::globally_generated;
    else if (mode_name == "va" || mode_name == "very_ample")
        mode = squarefold::cones::ReiderMode::very_ample;
    else
        throw std::invalid_argument("unknown reider mode: " + mode_name);
    const long long cap = resolve_cap(cap_flag, squarefold::cones::kDefaultReiderCap);
    env.inputs["cap"] = cap;
    squarefold::cones::ReiderResult r;
    if (surface_kind(c.surface) == SurfaceKind::cartesian) {
        const CartesianClass L{Rat(c.a), Rat(c.a2.value_or(c.a)), Rat(c.k), c.genus};
        r = squarefold::cones::reider_certify(c.genus, L, mode, cap);
    } else {
        r = squarefold::cones::reider_certify(
            c.genus, SymmetricClass{Rat(c.a), Rat(c.k), c.genus}, mode, cap);
    }
    env.outputs = squarefold::report::json_of(r);
    env.citations = {
        "adjoint-bundle obstruction test: an effective class of bounded degree "
        "with the stated intersection numbers is the only way the property can fail",
        "candidate self-intersections are relaxed by the index bound, so the "
        "empty list is a sound certificate within the cap"};
    return env;
}

ReportEnvelope search_envelope(const std::string& subquery,
                               const squarefold::search::SearchReport& r) {
    ReportEnvelope env;
    env.command = "search " + subquery;
    env.outputs = squarefold::report::json_of(r);
    env.citations = {r.bounds_used, r.exhaustive_within};
    return env;
}

ReportEnvelope run_verify_paper() {
    ReportEnvelope env;
    env.command = "verify-paper";
    const auto outcome = squarefold::golden::run_golden_suite();
    env.outputs["checks"] = outcome.checks;
    Json mm = Json::array();
    for (const auto& m : outcome.mismatches)
        mm.push_back(Json{{"check", m.check}, {"expected", m.expected}, {"actual", m.actual}});
    env.outputs["mismatches"] = std::move(mm);
    env.citations = outcome.citations;
    env.status = outcome.ok() ? Status::ok : Status::mismatch;
    return env;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact numerical invariants and positivity verdicts for squares "
                 "and symmetric squares of curves"};
    app.require_subcommand(1);

    std::string format_name = "json";
    std::string out_path;
    app.add_option("--format", format_name, "output format: json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    CommonArgs c;
    const auto add_common = [&](CLI::App* sub, bool need_class) {
        sub->add_option("--surface", c.surface, "cartesian or symmetric")
            ->check(CLI::IsMember({"cartesian", "symmetric"}));
        sub->add_option("--genus", c.genus, "genus of the curve")->required();
        auto* a = sub->add_option("--a", c.a, "degree coordinate a");
        sub->add_option("--a2", c.a2, "second degree coordinate a' (cartesian only)");
        sub->add_option("--k", c.k, "valence k");
        if (need_class) a->required();
    };

    auto* inv = app.add_subcommand("invariants", "projection profile of an embedding class");
    add_common(inv, true);

    auto* cone = app.add_subcommand("cone", "positivity verdicts for a class");
    add_common(cone, true);
    std::string facts_path;
    cone->add_option("--facts", facts_path, "known-facts overlay file");

    auto* reider = app.add_subcommand("reider", "adjoint-bundle obstruction certification");
    add_common(reider, true);
    std::string mode_name = "va";
    std::optional<long long> cap_flag;
    reider->add_option("--mode", mode_name, "gg (global generation) or va (very ampleness)")
        ->check(CLI::IsMember({"gg", "va", "globally_generated", "very_ample"}));
    reider->add_option("--cap", cap_flag, "enumeration cap (env SQUAREFOLD_CAP)");

    auto* search = app.add_subcommand("search", "diophantine degree searches");
    search->require_subcommand(1);
    long long a_max = 600;
    auto* p4 = search->add_subcommand("p4", "double-point-free projections to P^4");
    p4->add_option("--genus", c.genus, "genus of the curve")->required();
    p4->add_option("--a-max", a_max, "bidegree search bound");
    auto* mindeg = search->add_subcommand("min-degree", "minimal embedding degree");
    add_common(mindeg, false);
    std::optional<long long> delta_flag, search_cap_flag;
    mindeg->add_option("--delta", delta_flag, "asserted minimal curve degree");
    mindeg->add_option("--cap", search_cap_flag,
                       "degree-coordinate cap for the symmetric search (env SQUAREFOLD_CAP)");
    auto* gsb = search->add_subcommand("gs-bound", "double-curve genus lower bound");
    add_common(gsb, false);
    auto* excl = search->add_subcommand("exclusion",
                                        "no non-special embedding of the square into P^4");
    excl->add_option("--genus", c.genus, "genus of the curve")->required();

    app.add_subcommand("verify-paper", "replay the published golden values");

    // Let --format/--out appear after the subcommand as well.
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format format = *squarefold::report::parse_format(format_name);
        ReportEnvelope env;
        if (app.got_subcommand(inv)) {
            env = run_invariants(c);
        } else if (app.got_subcommand(cone)) {
            env = run_cone(c, facts_path);
        } else if (app.got_subcommand(reider)) {
            env = run_reider(c, mode_name, cap_flag);
        } else if (app.got_subcommand(search)) {
            const auto profile = CurveProfile::make(
                c.genus, true, squarefold::lattice::TriState::unknown,
                squarefold::lattice::TriState::unknown, delta_flag);
            if (search->got_subcommand(p4)) {
                auto r = squarefold::search::p4_search(c.genus, a_max);
                env = search_envelope("p4", r);
                env.inputs = Json{{"genus", c.genus}, {"a_max", a_max}};
            } else if (search->got_subcommand(mindeg)) {
                squarefold::search::SearchReport r;
                if (surface_kind(c.surface) == SurfaceKind::cartesian) {
                    const long long delta =
                        delta_flag.value_or(squarefold::search::delta_lower_bound(
                            profile, squarefold::search::DeltaMode::conservative));
                    r = squarefold::search::min_degree_cartesian(c.genus, delta);
                } else {
                    r = squarefold::search::min_degree_symmetric(
                        c.genus, profile, resolve_cap(search_cap_flag, 0));
                }
                env = search_envelope("min-degree", r);
                env.inputs = Json{{"surface", c.surface}, {"genus", c.genus}};
            } else if (search->got_subcommand(gsb)) {
                const long long bound = squarefold::search::gS_lower_bound(
                    surface_kind(c.surface), c.genus);
                env.command = "search gs-bound";
                env.inputs = Json{{"surface", c.surface}, {"genus", c.genus}};
                env.outputs["gS_lower_bound"] = bound;
                env.citations = {
                    "minimal-degree embedding combined with the double-curve "
                    "genus formula"};
            } else {
                auto r = squarefold::search::nonspecial_p4_exclusion(c.genus);
                env = search_envelope("exclusion", r);
                env.inputs = Json{{"genus", c.genus}};
            }
        } else {
            env = run_verify_paper();
        }
        emit(env, format, out_path);
        return env.status == Status::mismatch ? 1 : 0;
    } catch (const squarefold::NotApplicableError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 3;
    } catch (const squarefold::InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
