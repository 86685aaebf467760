#pragma once

// Verification reports: one record per check, serialized as JSON (schema
// "frobkit-report/1") or as an aligned text table.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobkit/numtheory.hpp"

namespace frobkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "frobkit-report/1";

std::string toolkit_version();

enum class Provenance { Paper, Derived, Trivial };

std::string provenance_tag(Provenance p);
Provenance parse_provenance(const std::string& tag);

struct CheckRecord {
    std::string id;
    Json inputs = Json::object();
    Json expected;
    Json computed;
    Provenance provenance = Provenance::Derived;
    bool pass = false;
    /// Reported for manual review; never counts as a failure.
    bool flagged = false;
    std::string note;
    std::optional<double> seconds;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
    std::string version = toolkit_version();
    std::string command;
    std::vector<CheckRecord> records;

    bool passed() const;
    std::size_t failures() const;
    /// Sorts records by id; call before serializing.
    void finalize();
    void append(const VerificationReport& other);

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json_value(const BigInt& v);
Json to_json_value(const Rational& v);

Json to_json(const VerificationReport& r, bool include_timings = false);
VerificationReport report_from_json(const Json& j);

std::string serialize(const VerificationReport& r, bool include_timings = false);
VerificationReport parse_report(const std::string& text);

std::string render_text(const VerificationReport& r);

} // namespace frobkit
