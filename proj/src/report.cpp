#include "squarefold/report.hpp"

#include <algorithm>
#include <sstream>

namespace squarefold::report {

const char* to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::mismatch: return "mismatch";
        default: return "inconclusive";
    }
}

std::optional<Status> status_from_string(const std::string& s) {
    if (s == "ok") return Status::ok;
    if (s == "mismatch") return Status::mismatch;
    if (s == "inconclusive") return Status::inconclusive;
    return std::nullopt;
}

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md") return Format::md;
    return std::nullopt;
}

Json json_value(const Rat& r) {
    if (is_integer(r)) return as_integer(r);
    return squarefold::to_string(r);
}

Json json_of(const invariants::ProjectionInvariants& pi) {
    Json j;
    j["n"] = pi.n;
    j["g_H"] = pi.g_H;
    j["d_dcurve"] = pi.d_dcurve;
    j["g_dcurve"] = pi.g_dcurve;
    j["pinch"] = pi.pinch;
    j["triple"] = pi.triple;
    j["double_pts_P4"] = pi.double_pts_P4;
    j["plausible"] = pi.plausible();
    return j;
}

Json json_of(const cones::PositivityVerdict& v) {
    Json j;
    j["property"] = cones::to_string(v.property);
    j["verdict"] = cones::to_string(v.verdict);
    j["provenance"] = v.provenance;
    return j;
}

Json json_of(const cones::VerdictList& list) {
    Json j = Json::array();
    for (const auto& v : list) j.push_back(json_of(v));
    return j;
}

Json json_of(const cones::ObstructionCandidate& c) {
    Json j;
    if (const auto* cc = std::get_if<lattice::CartesianClass>(&c.gamma)) {
        j["gamma"] = Json{{"a", json_value(cc->a)},
                          {"a2", json_value(cc->a_prime)},
                          {"k", json_value(cc->k)}};
    } else {
        const auto& sc = std::get<lattice::SymmetricClass>(c.gamma);
        j["gamma"] = Json{{"a", json_value(sc.a)}, {"k", json_value(sc.k)}};
    }
    j["condition"] = cones::to_string(c.condition);
    j["L_dot_gamma"] = json_value(c.L_dot_gamma);
    j["gamma_sq"] = json_value(c.gamma_sq);
    return j;
}

Json json_of(const cones::ReiderResult& r) {
    Json j;
    j["mode"] = cones::to_string(r.mode);
    j["cap"] = r.cap;
    j["certified_within_cap"] = r.certified_within_cap;
    Json obs = Json::array();
    for (const auto& o : r.obstructions) obs.push_back(json_of(o));
    j["obstructions"] = std::move(obs);
    return j;
}

Json json_of(const search::SearchReport& r) {
    Json j;
    j["query"] = r.query;
    j["result"] = r.result;
    Json w = Json::array();
    for (const auto& t : r.witnesses) w.push_back(Json::array({t[0], t[1], t[2]}));
    j["witnesses"] = std::move(w);
    Json e = Json::array();
    for (const auto& el : r.eliminated)
        e.push_back(Json{{"candidate", el.candidate}, {"reason", el.reason}});
    j["eliminated"] = std::move(e);
    j["bounds_used"] = r.bounds_used;
    j["exhaustive_within"] = r.exhaustive_within;
    return j;
}

Json json_of(const hyperbolicity::HyperbolicityVerdict& v) {
    Json j;
    j["subject"] = hyperbolicity::to_string(v.subject);
    j["verdict"] = lattice::to_string(v.verdict);
    j["normalization_class"] = hyperbolicity::to_string(v.normalization_class);
    j["provenance"] = v.provenance;
    return j;
}

Json ReportEnvelope::to_json() const {
    Json j;
    j["command"] = command;
    j["status"] = to_string(status);
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["citations"] = citations;
    return j;
}

ReportEnvelope ReportEnvelope::from_json(const Json& j) {
    ReportEnvelope e;
    e.command = j.at("command").get<std::string>();
    const auto st = status_from_string(j.at("status").get<std::string>());
    if (!st) throw std::invalid_argument("ReportEnvelope: bad status field");
    e.status = *st;
    e.inputs = j.at("inputs");
    e.outputs = j.at("outputs");
    e.citations = j.at("citations").get<std::vector<std::string>>();
    return e;
}

std::string ReportEnvelope::to_json_string() const { return to_json().dump(2) + "\n"; }

namespace {

/// Scalar rendering shared by csv and md: plain decimal text, no quotes
/// around numbers.
std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void flatten(const Json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, path.empty() ? key : path + "." + key, rows);
    } else if (j.is_array()) {
        if (j.empty()) rows.emplace_back(path, "[]");
        size_t i = 0;
        for (const auto& value : j) flatten(value, path + "[" + std::to_string(i++) + "]", rows);
    } else {
        rows.emplace_back(path, scalar_text(j));
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

using Rows = std::vector<std::array<std::string, 3>>;

Rows envelope_rows(const ReportEnvelope& e) {
    Rows rows;
    rows.push_back({"command", "command", e.command});
    rows.push_back({"status", "status", to_string(e.status)});
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(e.inputs, "", flat);
    for (auto& [k, v] : flat) rows.push_back({"input", k, v});
    flat.clear();
    flatten(e.outputs, "", flat);
    for (auto& [k, v] : flat) rows.push_back({"output", k, v});
    for (size_t i = 0; i < e.citations.size(); ++i)
        rows.push_back({"citation", "citation[" + std::to_string(i) + "]", e.citations[i]});
    return rows;
}

}  // namespace

std::string ReportEnvelope::to_csv() const {
    std::ostringstream out;
    out << "section,key,value\n";
    for (const auto& row : envelope_rows(*this))
        out << csv_quote(row[0]) << ',' << csv_quote(row[1]) << ',' << csv_quote(row[2])
            << '\n';
    return out.str();
}

std::string ReportEnvelope::to_markdown() const {
    const Rows rows = envelope_rows(*this);
    std::array<size_t, 3> width = {7, 3, 5};  // headers: section, key, value
    for (const auto& row : rows)
        for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], row[c].size());
    const auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::ostringstream out;
    out << "# " << command << "\n\n";
    out << "| " << pad("section", width[0]) << " | " << pad("key", width[1]) << " | "
        << pad("value", width[2]) << " |\n";
    out << "| " << std::string(width[0], '-') << " | " << std::string(width[1], '-')
        << " | " << std::string(width[2], '-') << " |\n";
    for (const auto& row : rows)
        out << "| " << pad(row[0], width[0]) << " | " << pad(row[1], width[1]) << " | "
            << pad(row[2], width[2]) << " |\n";
    return out.str();
}

std::string ReportEnvelope::render(Format f) const {
    switch (f) {
        case Format::json: return to_json_string();
        case Format::csv: return to_csv();
        default: return to_markdown();
    }
}

}  // namespace squarefold::report
