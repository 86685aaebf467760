#include "frobkit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "frobkit/errors.hpp"

#ifndef FROBKIT_VERSION
#define FROBKIT_VERSION "0.0.0"
#endif

namespace frobkit {

std::string toolkit_version() { return FROBKIT_VERSION; }

std::string provenance_tag(Provenance p) {
    switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Derived: return "DERIVED";
    case Provenance::Trivial: return "TRIVIAL";
    }
    return "DERIVED";
}

Provenance parse_provenance(const std::string& tag) {
    if (tag == "PAPER") return Provenance::Paper;
    if (tag == "DERIVED") return Provenance::Derived;
    if (tag == "TRIVIAL") return Provenance::Trivial;
    throw PreconditionViolated("unknown provenance tag '" + tag + "'");
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

void VerificationReport::finalize() {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

void VerificationReport::append(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

Json to_json_value(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

Json to_json_value(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1) return to_json_value(BigInt(boost::multiprecision::numerator(v)));
    return v.str();
}

Json to_json(const VerificationReport& r, bool include_timings) {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = r.version;
    j["command"] = r.command;
    j["status"] = r.passed() ? "pass" : "fail";
    j["failures"] = r.failures();
    Json records = Json::array();
    for (const auto& c : r.records) {
        Json rec;
        rec["id"] = c.id;
        rec["inputs"] = c.inputs;
        rec["expected"] = c.expected;
        rec["computed"] = c.computed;
        rec["provenance"] = provenance_tag(c.provenance);
        rec["pass"] = c.pass;
        rec["flagged"] = c.flagged;
        if (!c.note.empty()) rec["note"] = c.note;
        if (include_timings && c.seconds) rec["seconds"] = *c.seconds;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    return j;
}

VerificationReport report_from_json(const Json& j) {
    if (j.value("schema", "") != kReportSchema) throw PreconditionViolated("report: unsupported schema");
    VerificationReport r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& rec : j.at("records")) {
        CheckRecord c;
        c.id = rec.at("id").get<std::string>();
        c.inputs = rec.at("inputs");
        c.expected = rec.at("expected");
        c.computed = rec.at("computed");
        c.provenance = parse_provenance(rec.at("provenance").get<std::string>());
        c.pass = rec.at("pass").get<bool>();
        c.flagged = rec.at("flagged").get<bool>();
        c.note = rec.value("note", "");
        if (rec.contains("seconds")) c.seconds = rec.at("seconds").get<double>();
        r.records.push_back(std::move(c));
    }
    return r;
}

std::string serialize(const VerificationReport& r, bool include_timings) {
    return to_json(r, include_timings).dump(2) + "\n";
}

VerificationReport parse_report(const std::string& text) { return report_from_json(Json::parse(text)); }

namespace {

std::string compact(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    std::string s = j.dump();
    constexpr std::size_t kMax = 60;
    if (s.size() > kMax) s = s.substr(0, kMax - 3) + "...";
    return s;
}

} // namespace

std::string render_text(const VerificationReport& r) {
    std::size_t id_width = 2;
    for (const auto& c : r.records) id_width = std::max(id_width, c.id.size());
    std::ostringstream out;
    out << "frobkit " << r.version << "  " << r.command << "\n";
    auto row = [&](const CheckRecord& c) {
        std::string status = c.flagged ? "FLAG" : c.pass ? "PASS" : "FAIL";
        out << status << "  " << c.id << std::string(id_width - c.id.size() + 2, ' ') << "["
            << provenance_tag(c.provenance) << "] expected=" << compact(c.expected)
            << " computed=" << compact(c.computed);
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << "\n";
    };
    for (const auto& c : r.records) {
        if (!c.flagged) row(c);
    }
    const bool any_flagged = std::any_of(r.records.begin(), r.records.end(), [](const auto& c) { return c.flagged; });
    if (any_flagged) {
        out << "flagged for manual review:\n";
        for (const auto& c : r.records) {
            if (c.flagged) row(c);
        }
    }
    out << (r.passed() ? "status: pass" : "status: fail") << " (" << r.records.size() << " checks, "
        << r.failures() << " failed)\n";
    return out.str();
}

} // namespace frobkit
