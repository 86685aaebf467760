#include "frobkit/weyl_data.hpp"

#include <fstream>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace detail {
extern const std::string_view kEmbeddedWeylData;
}

namespace {

std::optional<std::uint64_t> parse_field(const std::string& tok, std::size_t line) {
    if (tok == "-") return std::nullopt;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty() || tok[0] == '-') {
        throw PreconditionViolated("weyl data line " + std::to_string(line) + ": bad number '" + tok + "'");
    }
    return v;
}

} // namespace

void WeylTable::add(WeylDatum d) {
    const std::string key = d.key;
    data_[key] = std::move(d);
}

void WeylTable::add(FamilyDatum f) {
    const std::string name = f.name;
    families_[name] = std::move(f);
}

const WeylDatum& WeylTable::datum(const std::string& key) const {
    const auto it = data_.find(key);
    if (it == data_.end()) throw PreconditionViolated("weyl data: no entry '" + key + "'");
    return it->second;
}

const FamilyDatum& WeylTable::family(const std::string& name) const {
    const auto it = families_.find(name);
    if (it == families_.end()) throw UnsupportedFamily("weyl data: no family '" + name + "'");
    return it->second;
}

WeylTable parse_weyl_data(std::string_view text) {
    WeylTable table;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "weyl") {
            if (tok.size() != 6) {
                throw PreconditionViolated("weyl data line " + std::to_string(line) + ": expected 5 fields");
            }
            WeylDatum d{tok[1], parse_field(tok[2], line), parse_field(tok[3], line), parse_field(tok[4], line),
                        tok[5]};
            if (d.provenance != "paper" && d.provenance != "external") {
                throw PreconditionViolated("weyl data line " + std::to_string(line) + ": unknown provenance '" +
                                           d.provenance + "'");
            }
            if (d.order && d.classes && *d.classes > *d.order) {
                throw PreconditionViolated("weyl data line " + std::to_string(line) + ": k(W) exceeds |W|");
            }
            if (d.rank && *d.rank == 0) {
                throw PreconditionViolated("weyl data line " + std::to_string(line) + ": m_d must be positive");
            }
            table.add(std::move(d));
        } else if (tok[0] == "family") {
            if (tok.size() < 3) {
                throw PreconditionViolated("weyl data line " + std::to_string(line) + ": family needs degrees");
            }
            FamilyDatum f{tok[1], {}};
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto v = parse_field(tok[i], line);
                if (!v || *v == 0) {
                    throw PreconditionViolated("weyl data line " + std::to_string(line) + ": bad degree");
                }
                f.degrees.push_back(*v);
            }
            table.add(std::move(f));
        } else {
            throw PreconditionViolated("weyl data line " + std::to_string(line) + ": unknown record '" + tok[0] +
                                       "'");
        }
    }
    return table;
}

WeylTable load_weyl_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionViolated("cannot open weyl data file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weyl_data(buf.str());
}

std::string_view embedded_weyl_data_text() { return detail::kEmbeddedWeylData; }

const WeylTable& embedded_weyl_data() {
    static const WeylTable table = parse_weyl_data(detail::kEmbeddedWeylData);
    return table;
}

} // namespace frobkit
