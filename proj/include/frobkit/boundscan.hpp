#pragma once

// Exact certification of the torus class-count bounds for groups of Lie type
// against the threshold p * |Out(S)|, window scans for the cases where a
// bound fails, and the Weyl-group inequality chains for the principal-block
// argument.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/numtheory.hpp"
#include "frobkit/weyl_data.hpp"

namespace frobkit {

enum class Family { A, BC, D, G2, F4, TwoF4, ThreeD4, E6, TwoE6, E7, E8, DefiningChar };

std::string family_name(Family f);
/// Accepts the names produced by family_name, case-insensitively.
std::optional<Family> parse_family(const std::string& name);
std::vector<Family> scanned_families();

enum class Branch {
    Default,
    TorusN,         // A: torus of order (q^n - e^n)/(q - e)
    TorusNMinus1,   // A: torus of order (q^(n-1) - e^(n-1))/(q - e)
    Minus,          // BC: torus q^n - 1
    Plus,           // BC: torus q^n + 1
    KNotDividing,   // D: k does not divide n
    MinusDivides,   // D: e = -, p | q^k - 1
    H,              // D: the pair of tori q^(n-1) +- 1
    Phi1Phi9,       // E7
    Phi2Phi18,      // E7
};

std::string branch_name(Branch b);

struct BoundCase {
    Family family = Family::A;
    /// A1, A2 or 2A2 for the defining-characteristic scan.
    std::string subfamily;
    std::uint64_t q = 0;
    std::uint64_t ell = 0;
    std::uint64_t f = 0;
    /// Rank parameter; 0 when the family has none.
    std::uint64_t n = 0;
    /// +1 / -1, or 0 when the family has no sign.
    int eps = 0;
    std::uint64_t p = 0;
    /// The derived k (classical), e (type A) or d (exceptional); 0 if unused.
    std::uint64_t e = 0;
    Branch branch = Branch::Default;
    Rational lhs;
    Rational rhs;

    bool holds() const { return lhs >= rhs; }
    /// Human-readable name of the simple group, e.g. "POmega(12,-,2)".
    std::string group_name() const;
};

std::uint64_t out_order(Family family, std::uint64_t q, std::uint64_t n = 0, int eps = 0);

/// Exact value of the family's torus lower bound on k_p'. Throws
/// UnsupportedBranch when the branch does not belong to the family.
Rational torus_lower_bound(Family family, std::uint64_t q, std::uint64_t n, int eps, Branch branch);

struct ScanWindow {
    std::uint64_t q_max = 32;
    std::uint64_t n_max = 16;
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 500;
    /// Upper bound on q = 2^(2m+1) for 2F4.
    std::uint64_t q_max_2f4 = std::uint64_t{1} << 13;
};

struct ScanOptions {
    ScanWindow window;
    unsigned workers = 1;
    /// Family degrees for the exceptional types; the embedded table when null.
    const WeylTable* data = nullptr;
};

struct ScanResult {
    Family family = Family::A;
    std::vector<BoundCase> exceptions;
    /// Failing cases outside the argument's stated range (BC with n = 2).
    std::vector<BoundCase> flagged;
    std::uint64_t cases_checked = 0;
};

/// Every window case passing the non-cyclicity filter where lhs < rhs,
/// sorted by (subfamily, n, eps, q, p).
ScanResult scan_exceptions(Family family, const ScanOptions& options = {});

/// Semisimple class count q^r against p |Z| |Out| in defining
/// characteristic, for A1 (f >= 2), A2 and 2A2.
ScanResult defining_char_scan(const std::string& subfamily, std::uint64_t q_max, unsigned workers = 1);
std::uint64_t default_defining_char_q_max(const std::string& subfamily);

/// Exponents a(d) of Phi_d in the order polynomial of the family.
std::vector<std::pair<std::uint64_t, std::uint64_t>> cyclotomic_exponents(Family family, const WeylTable& data);

/// floor((p^n - 1) / n).
BigInt semilinear_class_lower_bound(std::uint64_t p, std::uint64_t n);
/// floor((p^n - 1) / (n + n^2)).
BigInt semilinear_rank3_lower_bound(std::uint64_t p, std::uint64_t n);

struct WeylChain {
    /// Characters lost to fusion: the chain starts from (k - delta) x.
    std::uint64_t delta = 0;
    /// Multiplier on |W| x in the middle term.
    std::uint64_t factor = 1;
};

struct WeylCertificate {
    BigInt lower_power;  // ((k - delta) x)^m
    BigInt middle;       // factor |W| x
    BigInt target;       // p^m - 1
    bool strict_link = false;  // lower_power > middle
    bool premise_link = false; // middle >= target
    bool conclusion = false;   // (k - delta) x >= p
};

WeylCertificate weyl_inequality(const WeylDatum& datum, std::uint64_t x, std::uint64_t p, WeylChain chain = {});

/// True iff N = d1 + d2 for divisors d1, d2 of M.
bool sum_of_two_divisors(std::uint64_t n, std::uint64_t m);
std::optional<std::pair<std::uint64_t, std::uint64_t>> two_divisor_witness(std::uint64_t n, std::uint64_t m);

struct E7Degree4Analysis {
    std::uint64_t classes = 0;      // k(W(L_d))
    std::uint64_t torus_weyl = 0;   // |W(T_d)|
    bool large_y_holds = false;     // (k y)^2 >= |W(T_d)| y for y = 3
    std::vector<std::uint64_t> primes_y1;
    std::vector<std::uint64_t> primes_y2;
    bool y1_non_divisible = false;  // p^2 - 1 does not divide |W(T_d)| for all primes_y1
    bool y2_no_two_divisor_sum = false;
};

/// y = 1, 2: the primes p > k y with p^2 - 1 <= |W(T_d)| y that the bound
/// alone does not settle.
E7Degree4Analysis e7_degree4_analysis(const WeylTable& data);

} // namespace frobkit
