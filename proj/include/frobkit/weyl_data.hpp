#pragma once

// Relative Weyl group constants and family metadata, read from a plain-text
// table. The format is documented in data/weyl_data.txt; a copy of that file
// is compiled into the library.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frobkit {

struct WeylDatum {
    std::string key;
    std::optional<std::uint64_t> order;   // |W|
    std::optional<std::uint64_t> classes; // k(W)
    std::optional<std::uint64_t> rank;    // m_d
    std::string provenance;               // "paper" or "external"
};

struct FamilyDatum {
    std::string name;
    std::vector<std::uint64_t> degrees;
};

class WeylTable {
public:
    void add(WeylDatum d);
    void add(FamilyDatum f);

    const WeylDatum& datum(const std::string& key) const;
    const FamilyDatum& family(const std::string& name) const;
    bool has_datum(const std::string& key) const { return data_.count(key) != 0; }
    bool has_family(const std::string& name) const { return families_.count(name) != 0; }

    const std::map<std::string, WeylDatum>& data() const { return data_; }
    const std::map<std::string, FamilyDatum>& families() const { return families_; }

private:
    std::map<std::string, WeylDatum> data_;
    std::map<std::string, FamilyDatum> families_;
};

/// Throws PreconditionViolated with the offending line number on malformed
/// input.
WeylTable parse_weyl_data(std::string_view text);
WeylTable load_weyl_data(const std::string& path);
const WeylTable& embedded_weyl_data();
std::string_view embedded_weyl_data_text();

} // namespace frobkit
