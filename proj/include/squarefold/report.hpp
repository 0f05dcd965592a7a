#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "squarefold/cones.hpp"
#include "squarefold/hyperbolicity.hpp"
#include "squarefold/invariants.hpp"
#include "squarefold/search.hpp"

namespace squarefold::report {

using Json = nlohmann::ordered_json;

enum class Status { ok, mismatch, inconclusive };
enum class Format { json, csv, md };

const char* to_string(Status s);
std::optional<Status> status_from_string(const std::string& s);
std::optional<Format> parse_format(const std::string& s);

/// Structured result of one CLI command. Serializes deterministically:
/// insertion-ordered keys, integers and "p/q" rationals only.
struct ReportEnvelope {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> citations;
    Status status = Status::ok;

    Json to_json() const;
    static ReportEnvelope from_json(const Json& j);

    /// Two-space indented JSON, stable key order.
    std::string to_json_string() const;
    /// Fixed columns: section,key,value. Sections are command, status,
    /// input, output, citation; keys are dotted paths into the envelope.
    std::string to_csv() const;
    /// Aligned two-column tables carrying the same flattened rows as csv.
    std::string to_markdown() const;

    std::string render(Format f) const;

    bool operator==(const ReportEnvelope&) const = default;
};

// -- value converters (exact: rationals become "p/q" strings) -----------------

Json json_value(const Rat& r);
Json json_of(const invariants::ProjectionInvariants& pi);
Json json_of(const cones::PositivityVerdict& v);
Json json_of(const cones::VerdictList& list);
Json json_of(const cones::ObstructionCandidate& c);
Json json_of(const cones::ReiderResult& r);
Json json_of(const search::SearchReport& r);
Json json_of(const hyperbolicity::HyperbolicityVerdict& v);

}  // namespace squarefold::report
