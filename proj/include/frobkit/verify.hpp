#pragma once

// The verification pipelines behind the command-line tool. Each returns a
// finalized report; none of them consult the clock unless timings are
// requested.

#include <cstdint>
#include <string>
#include <vector>

#include "frobkit/boundscan.hpp"
#include "frobkit/grouplib.hpp"
#include "frobkit/nearfield.hpp"
#include "frobkit/report.hpp"
#include "frobkit/weyl_data.hpp"

namespace frobkit {

struct RunOptions {
    unsigned workers = 1;
    std::size_t cap = kDefaultElementCap;
    bool extended = false;
    /// Weyl and family data; the embedded table when null.
    const WeylTable* data = nullptr;
    bool timings = false;
};

/// All Dickson-admissible (p, k, n) with q^n <= qn_max, sorted by (q^n, p, k, n).
std::vector<DicksonParams> dickson_cases(std::uint64_t qn_max);

struct ExceptionalRow {
    std::uint64_t p = 0;
    std::uint64_t d = 0;
    std::uint64_t lB = 0;
};

/// The seven sporadic rows of the l(B) table, as quoted constants.
const std::vector<ExceptionalRow>& exceptional_rows();

/// Throws PreconditionViolated when the Dickson condition fails.
VerificationReport nearfield_report(const DicksonParams& dp, bool brute_force, bool affine,
                                    const RunOptions& options = {});
VerificationReport table34_report(std::uint64_t bound, const RunOptions& options = {});
VerificationReport regular_subgroups_report(std::uint64_t p, const RunOptions& options = {});
VerificationReport frobenius_report(std::uint64_t p, std::uint64_t t, const RunOptions& options = {});
/// family is a family_name, "DefiningChar" for all three subfamilies, or "all".
VerificationReport scan_report(const std::string& family, const ScanWindow& window, const RunOptions& options = {});
/// The complete acceptance suite.
VerificationReport verify_all_report(const RunOptions& options = {});

} // namespace frobkit
