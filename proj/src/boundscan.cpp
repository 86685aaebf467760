#include "frobkit/boundscan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "frobkit/errors.hpp"
#include "frobkit/parallel.hpp"

namespace frobkit {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A, "A"},           {Family::BC, "BC"},     {Family::D, "D"},   {Family::G2, "G2"},
    {Family::F4, "F4"},         {Family::TwoF4, "2F4"}, {Family::ThreeD4, "3D4"},
    {Family::E6, "E6"},         {Family::TwoE6, "2E6"}, {Family::E7, "E7"}, {Family::E8, "E8"},
    {Family::DefiningChar, "DefiningChar"},
};

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

PrimePower require_prime_power(std::uint64_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw PreconditionViolated("q=" + std::to_string(q) + " is not a prime power");
    return *pp;
}

BigInt signed_power(std::uint64_t q, std::uint64_t t, int eps) {
    // q^t - eps^t
    const BigInt one = (eps < 0 && t % 2 == 1) ? BigInt(-1) : BigInt(1);
    return ipow(q, t) - one;
}

BigInt q_minus_eps(std::uint64_t q, int eps) { return BigInt(q) - eps; }

std::uint64_t gcd_big(std::uint64_t a, const BigInt& b) {
    const BigInt r = b < 0 ? BigInt(-b) : b;
    return gcd(a, to_u64(r % a));
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = lo; q <= hi; ++q) {
        if (prime_power(q)) out.push_back(q);
    }
    return out;
}

// Least e >= 1 with p | q^e - eps^e, i.e. the order of eps*q modulo p.
std::uint64_t order_e(std::uint64_t q, int eps, std::uint64_t p) {
    const auto qq = static_cast<std::int64_t>(q % p);
    return multiplicative_order(eps < 0 ? -qq : qq, p);
}

// Least k >= 1 with p | q^(2k) - 1.
std::uint64_t order_k(std::uint64_t q, std::uint64_t p) { return multiplicative_order(static_cast<std::int64_t>(mulmod(q, q, p)), p); }

void require_eps(int eps) {
    if (eps != 1 && eps != -1) throw PreconditionViolated("sign must be +1 or -1");
}

void sort_cases(std::vector<BoundCase>& v) {
    std::sort(v.begin(), v.end(), [](const BoundCase& a, const BoundCase& b) {
        return std::tie(a.subfamily, a.n, a.eps, a.q, a.p) < std::tie(b.subfamily, b.n, b.eps, b.q, b.p);
    });
}

struct Partial {
    std::vector<BoundCase> exceptions;
    std::vector<BoundCase> flagged;
    std::uint64_t checked = 0;
};

ScanResult merge(Family family, std::vector<Partial>& parts) {
    ScanResult r;
    r.family = family;
    for (auto& part : parts) {
        r.exceptions.insert(r.exceptions.end(), part.exceptions.begin(), part.exceptions.end());
        r.flagged.insert(r.flagged.end(), part.flagged.begin(), part.flagged.end());
        r.cases_checked += part.checked;
    }
    sort_cases(r.exceptions);
    sort_cases(r.flagged);
    return r;
}

BoundCase make_case(Family family, std::uint64_t q, std::uint64_t n, int eps, std::uint64_t p, std::uint64_t e,
                    Branch branch, Rational lhs, Rational rhs) {
    const auto pp = require_prime_power(q);
    BoundCase c;
    c.family = family;
    c.q = q;
    c.ell = pp.prime;
    c.f = pp.exponent;
    c.n = n;
    c.eps = eps;
    c.p = p;
    c.e = e;
    c.branch = branch;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

void scan_type_a(std::uint64_t q, const std::vector<std::uint64_t>& primes, const ScanWindow& w, Partial& out) {
    for (int eps : {1, -1}) {
        for (std::uint64_t n = 3; n <= w.n_max; ++n) {
            for (std::uint64_t p : primes) {
                if (q % p == 0) continue;
                const std::uint64_t e = order_e(q, eps, p);
                if (n < 2 * e) continue;
                // p dividing |Z(SL)| belongs to a different argument.
                if (gcd_big(n, q_minus_eps(q, eps)) % p == 0) continue;
                ++out.checked;
                std::optional<Rational> best;
                Branch best_branch = Branch::TorusN;
                for (Branch b : {Branch::TorusNMinus1, Branch::TorusN}) {
                    const std::uint64_t t = b == Branch::TorusN ? n : n - 1;
                    const BigInt torus = signed_power(q, t, eps) / q_minus_eps(q, eps);
                    if (torus % p == 0) continue;
                    Rational v = torus_lower_bound(Family::A, q, n, eps, b);
                    if (!best || v > *best) {
                        best = v;
                        best_branch = b;
                    }
                }
                const Rational rhs(BigInt(p) * out_order(Family::A, q, n, eps));
                auto c = make_case(Family::A, q, n, eps, p, e, best_branch, best.value_or(Rational(0)), rhs);
                if (!c.holds()) out.exceptions.push_back(std::move(c));
            }
        }
    }
}

void scan_type_bc(std::uint64_t q, const std::vector<std::uint64_t>& primes, const ScanWindow& w, Partial& out) {
    for (std::uint64_t n = 2; n <= w.n_max; ++n) {
        for (std::uint64_t p : primes) {
            if (q % p == 0) continue;
            const std::uint64_t k = order_k(q, p);
            if (n < 2 * k) continue;
            ++out.checked;
            Branch b = Branch::Minus;
            if (n > 2 && (ipow(q, n) - 1) % p == 0) b = Branch::Plus;
            const Rational rhs(BigInt(p) * out_order(Family::BC, q, n));
            auto c = make_case(Family::BC, q, n, 0, p, k, b, torus_lower_bound(Family::BC, q, n, 0, b), rhs);
            if (c.holds()) continue;
            (n == 2 ? out.flagged : out.exceptions).push_back(std::move(c));
        }
    }
}

void scan_type_d(std::uint64_t q, const std::vector<std::uint64_t>& primes, const ScanWindow& w, Partial& out) {
    for (int eps : {1, -1}) {
        for (std::uint64_t n = 4; n <= w.n_max; ++n) {
            for (std::uint64_t p : primes) {
                if (q % p == 0) continue;
                const std::uint64_t k = order_k(q, p);
                if (n < 2 * k) continue;
                if (eps < 0 && n == 2 * k) continue;
                ++out.checked;
                Branch b = Branch::H;
                if (n % k != 0) {
                    b = Branch::KNotDividing;
                } else if (eps < 0 && (ipow(q, k) - 1) % p == 0) {
                    b = Branch::MinusDivides;
                }
                const Rational rhs(BigInt(p) * out_order(Family::D, q, n, eps));
                auto c = make_case(Family::D, q, n, eps, p, k, b, torus_lower_bound(Family::D, q, n, eps, b), rhs);
                if (!c.holds()) out.exceptions.push_back(std::move(c));
            }
        }
    }
}

std::set<std::uint64_t> candidate_primes(Family family, std::uint64_t q, const WeylTable& data,
                                         std::uint64_t p_min) {
    std::set<std::uint64_t> out;
    for (auto [d, a] : cyclotomic_exponents(family, data)) {
        if (a < 2) continue;
        for (std::uint64_t r : prime_divisors(to_u64(cyclotomic_value(d, q)))) {
            if (r >= p_min && q % r != 0) out.insert(r);
        }
    }
    return out;
}

std::uint64_t sylow_d(Family family, std::uint64_t q, std::uint64_t p, const WeylTable& data) {
    for (auto [d, a] : cyclotomic_exponents(family, data)) {
        if (a >= 2 && cyclotomic_value(d, q) % p == 0) return d;
    }
    return 0;
}

void scan_exceptional(Family family, std::uint64_t q, const ScanWindow& w, const WeylTable& data, Partial& out) {
    if (family == Family::G2 && q < 3) return;
    for (std::uint64_t p : candidate_primes(family, q, data, w.p_min)) {
        ++out.checked;
        Branch b = Branch::Default;
        if (family == Family::E7) {
            const BigInt t19 = cyclotomic_value(1, q) * cyclotomic_value(9, q);
            b = t19 % p != 0 ? Branch::Phi1Phi9 : Branch::Phi2Phi18;
        }
        const Rational rhs(BigInt(p) * out_order(family, q));
        auto c = make_case(family, q, 0, 0, p, sylow_d(family, q, p, data), b,
                           torus_lower_bound(family, q, 0, 0, b), rhs);
        if (!c.holds()) out.exceptions.push_back(std::move(c));
    }
}

void scan_2f4(std::uint64_t m, const ScanWindow& w, Partial& out) {
    const std::uint64_t q = std::uint64_t{1} << (2 * m + 1);
    const std::uint64_t product = (q - 1) * (q + 1) * (q * q + 1);
    for (std::uint64_t p : prime_divisors(product)) {
        if (p < w.p_min) continue;
        ++out.checked;
        const Rational rhs(BigInt(p) * out_order(Family::TwoF4, q));
        std::uint64_t d = (q - 1) % p == 0 ? 1 : (q + 1) % p == 0 ? 2 : 4;
        auto c = make_case(Family::TwoF4, q, m, 0, p, d, Branch::Default,
                           torus_lower_bound(Family::TwoF4, q, 0, 0, Branch::Default), rhs);
        if (!c.holds()) out.exceptions.push_back(std::move(c));
    }
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::string family_name(Family f) {
    for (const auto& info : kFamilies) {
        if (info.family == f) return info.name;
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (const auto& info : kFamilies) {
        if (lower(info.name) == lower(name)) return info.family;
    }
    return std::nullopt;
}

std::vector<Family> scanned_families() {
    return {Family::A,  Family::BC, Family::D,     Family::G2, Family::F4, Family::TwoF4,
            Family::ThreeD4, Family::E6, Family::TwoE6, Family::E7, Family::E8};
}

std::string branch_name(Branch b) {
    switch (b) {
    case Branch::Default: return "default";
    case Branch::TorusN: return "t=n";
    case Branch::TorusNMinus1: return "t=n-1";
    case Branch::Minus: return "minus";
    case Branch::Plus: return "plus";
    case Branch::KNotDividing: return "k-not-dividing-n";
    case Branch::MinusDivides: return "minus-p-divides-q^k-1";
    case Branch::H: return "h";
    case Branch::Phi1Phi9: return "phi1phi9";
    case Branch::Phi2Phi18: return "phi2phi18";
    }
    return "?";
}

std::string BoundCase::group_name() const {
    const std::string qs = std::to_string(q);
    const std::string sign = eps > 0 ? "+" : "-";
    switch (family) {
    case Family::A: return (eps > 0 ? "PSL(" : "PSU(") + std::to_string(n) + "," + qs + ")";
    case Family::BC: return "PSp(" + std::to_string(2 * n) + "," + qs + ")";
    case Family::D: return "POmega(" + std::to_string(2 * n) + "," + sign + "," + qs + ")";
    case Family::DefiningChar:
        if (subfamily == "A1") return "PSL(2," + qs + ")";
        if (subfamily == "A2") return "PSL(3," + qs + ")";
        return "PSU(3," + qs + ")";
    default: return family_name(family) + "(" + qs + ")";
    }
}

std::uint64_t out_order(Family family, std::uint64_t q, std::uint64_t n, int eps) {
    const auto pp = require_prime_power(q);
    const std::uint64_t f = pp.exponent;
    switch (family) {
    case Family::A:
        require_eps(eps);
        return 2 * f * gcd_big(n, q_minus_eps(q, eps));
    case Family::BC:
        if (n < 2) throw PreconditionViolated("out_order: BC needs n >= 2");
        return n == 2 ? 2 * f : f * gcd(2, q - 1);
    case Family::D: {
        require_eps(eps);
        if (n < 4) throw PreconditionViolated("out_order: D needs n >= 4");
        const std::uint64_t g = gcd_big(4, ipow(q, n) - eps);
        return (n == 4 && eps > 0 ? 6 : 2) * f * g;
    }
    case Family::G2: return f;
    case Family::F4: return q % 2 == 0 ? 2 * f : f;
    case Family::TwoF4:
        if (pp.prime != 2 || f % 2 == 0) throw PreconditionViolated("out_order: 2F4 needs q = 2^(2m+1)");
        return f;
    case Family::ThreeD4: return 3 * f;
    case Family::E6: return 2 * f * gcd(3, q - 1);
    case Family::TwoE6: return 2 * f * gcd(3, q + 1);
    case Family::E7: return f * gcd(2, q - 1);
    case Family::E8: return f;
    case Family::DefiningChar: break;
    }
    throw UnsupportedFamily("out_order: no formula for family " + family_name(family));
}

Rational torus_lower_bound(Family family, std::uint64_t q, std::uint64_t n, int eps, Branch branch) {
    require_prime_power(q);
    auto unsupported = [&] {
        return UnsupportedBranch("torus_lower_bound: branch " + branch_name(branch) + " does not apply to " +
                                 family_name(family));
    };
    const BigInt Q(q);
    switch (family) {
    case Family::A: {
        require_eps(eps);
        if (branch != Branch::TorusN && branch != Branch::TorusNMinus1) throw unsupported();
        if (n < 3) throw PreconditionViolated("torus_lower_bound: A needs n >= 3");
        const std::uint64_t t = branch == Branch::TorusN ? n : n - 1;
        return Rational(signed_power(q, t, eps), BigInt(t) * q_minus_eps(q, eps));
    }
    case Family::BC: {
        if (n < 2) throw PreconditionViolated("torus_lower_bound: BC needs n >= 2");
        if (branch == Branch::Minus) return 2 + Rational(ipow(q, n) - 2, 2 * n);
        if (branch == Branch::Plus) return 2 + Rational(ipow(q, n), 2 * n);
        throw unsupported();
    }
    case Family::D: {
        require_eps(eps);
        if (n < 4) throw PreconditionViolated("torus_lower_bound: D needs n >= 4");
        if (branch == Branch::KNotDividing) return 1 + Rational(ipow(q, n) - eps, 2 * n);
        if (branch == Branch::MinusDivides) return 1 + Rational(ipow(q, n) + 1, 2 * n);
        if (branch == Branch::H) return 2 + Rational(ipow(q, n - 1) - 2, n - 1);
        throw unsupported();
    }
    case Family::E7: {
        if (branch == Branch::Phi1Phi9) {
            return 1 + Rational(cyclotomic_value(1, Q) * cyclotomic_value(9, Q) - 1, 18);
        }
        if (branch == Branch::Phi2Phi18) {
            return 1 + Rational(cyclotomic_value(2, Q) * cyclotomic_value(18, Q) - 1, 18);
        }
        throw unsupported();
    }
    default: break;
    }
    if (branch != Branch::Default) throw unsupported();
    switch (family) {
    case Family::G2: return 1 + Rational(Q * Q, 3);
    case Family::F4:
        return 1 + Rational(cyclotomic_value(8, Q) - 1, 8) + Rational(cyclotomic_value(12, Q) - 1, 12);
    case Family::TwoF4: return 1 + Rational(Q * Q + Q, 6);
    case Family::ThreeD4: return 1 + Rational(ipow(Q, 4) - Q * Q, 4);
    case Family::E6: return 1 + Rational(ipow(Q, 6) + ipow(Q, 3), 9);
    case Family::TwoE6: return 1 + Rational(ipow(Q, 6) - ipow(Q, 3), 9);
    case Family::E8: return 1 + Rational(cyclotomic_value(30, Q) - 1, 30);
    default: break;
    }
    throw UnsupportedFamily("torus_lower_bound: no bound for family " + family_name(family));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> cyclotomic_exponents(Family family, const WeylTable& data) {
    std::map<std::uint64_t, std::uint64_t> a;
    auto add_factor = [&a](std::uint64_t m, int sign) {
        // q^m - sign = prod of Phi_d over d | m (sign +1), or over d | 2m
        // with d not dividing m (sign -1).
        for (std::uint64_t d : divisors(2 * m)) {
            const bool in_minus = m % d == 0;
            if ((sign > 0 && in_minus) || (sign < 0 && !in_minus)) ++a[d];
        }
    };
    switch (family) {
    case Family::G2:
    case Family::F4:
    case Family::E6:
    case Family::E7:
    case Family::E8:
        for (auto deg : data.family(family_name(family)).degrees) add_factor(deg, 1);
        break;
    case Family::TwoE6:
        for (auto deg : data.family("E6").degrees) add_factor(deg, deg % 2 == 0 ? 1 : -1);
        break;
    case Family::ThreeD4:
        a = {{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}};
        break;
    default:
        throw UnsupportedFamily("cyclotomic_exponents: not available for " + family_name(family));
    }
    return {a.begin(), a.end()};
}

ScanResult scan_exceptions(Family family, const ScanOptions& options) {
    const ScanWindow& w = options.window;
    const WeylTable& data = options.data ? *options.data : embedded_weyl_data();
    if (family == Family::DefiningChar) {
        throw UnsupportedFamily("scan_exceptions: use defining_char_scan for the defining characteristic");
    }
    if (family == Family::TwoF4) {
        std::vector<std::uint64_t> ms;
        for (std::uint64_t m = 1; (std::uint64_t{1} << (2 * m + 1)) <= w.q_max_2f4; ++m) ms.push_back(m);
        std::vector<Partial> parts(ms.size());
        parallel_for(ms.size(), options.workers, [&](std::size_t i) { scan_2f4(ms[i], w, parts[i]); });
        return merge(family, parts);
    }
    const auto qs = prime_powers_upto(2, w.q_max);
    const auto primes = primes_in(w.p_min, w.p_max);
    std::vector<Partial> parts(qs.size());
    parallel_for(qs.size(), options.workers, [&](std::size_t i) {
        switch (family) {
        case Family::A: scan_type_a(qs[i], primes, w, parts[i]); break;
        case Family::BC: scan_type_bc(qs[i], primes, w, parts[i]); break;
        case Family::D: scan_type_d(qs[i], primes, w, parts[i]); break;
        default: scan_exceptional(family, qs[i], w, data, parts[i]); break;
        }
    });
    return merge(family, parts);
}

std::uint64_t default_defining_char_q_max(const std::string& subfamily) {
    if (subfamily == "A1") return to_u64(ipow(5, 10));
    if (subfamily == "A2") return 169;
    if (subfamily == "2A2") return 121;
    throw UnsupportedFamily("defining_char_scan: unknown subfamily '" + subfamily + "'");
}

ScanResult defining_char_scan(const std::string& subfamily, std::uint64_t q_max, unsigned workers) {
    default_defining_char_q_max(subfamily);
    const bool a1 = subfamily == "A1";
    const std::uint64_t f_min = a1 ? 2 : 1;
    const auto primes = primes_in(5, a1 ? isqrt(q_max) : q_max);
    std::vector<Partial> parts(primes.size());
    parallel_for(primes.size(), workers, [&](std::size_t idx) {
        const std::uint64_t p = primes[idx];
        BigInt q = ipow(p, f_min);
        for (std::uint64_t f = f_min; q <= q_max; ++f, q *= p) {
            const std::uint64_t qq = to_u64(q);
            std::uint64_t z = 0;
            std::uint64_t out = 0;
            std::uint64_t r = 2;
            if (a1) {
                z = gcd(2, qq - 1);
                out = z * f;
                r = 1;
            } else if (subfamily == "A2") {
                z = gcd(3, qq - 1);
                out = 2 * z * f;
            } else {
                z = gcd(3, qq + 1);
                out = 2 * f * z;
            }
            ++parts[idx].checked;
            BoundCase c;
            c.family = Family::DefiningChar;
            c.subfamily = subfamily;
            c.q = qq;
            c.ell = p;
            c.f = f;
            c.n = r + 1;
            c.p = p;
            c.lhs = Rational(ipow(q, r));
            c.rhs = Rational(BigInt(p) * z * out);
            if (!c.holds()) parts[idx].exceptions.push_back(std::move(c));
        }
    });
    return merge(Family::DefiningChar, parts);
}

BigInt semilinear_class_lower_bound(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p) || n < 1) throw PreconditionViolated("semilinear_class_lower_bound: need p prime, n >= 1");
    return (ipow(p, n) - 1) / n;
}

BigInt semilinear_rank3_lower_bound(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p) || n < 1) throw PreconditionViolated("semilinear_rank3_lower_bound: need p prime, n >= 1");
    return (ipow(p, n) - 1) / (n + n * n);
}

WeylCertificate weyl_inequality(const WeylDatum& datum, std::uint64_t x, std::uint64_t p, WeylChain chain) {
    if (!datum.order || !datum.classes || !datum.rank) {
        throw PreconditionViolated("weyl_inequality: datum '" + datum.key + "' lacks |W|, k(W) or m_d");
    }
    if (x == 0) throw PreconditionViolated("weyl_inequality: x must be positive");
    if (*datum.classes < chain.delta) throw PreconditionViolated("weyl_inequality: delta exceeds k(W)");
    const BigInt base = BigInt(*datum.classes - chain.delta) * x;
    WeylCertificate c;
    c.lower_power = ipow(base, *datum.rank);
    c.middle = BigInt(chain.factor) * *datum.order * x;
    c.target = ipow(p, *datum.rank) - 1;
    c.strict_link = c.lower_power > c.middle;
    c.premise_link = c.middle >= c.target;
    c.conclusion = base >= p;
    return c;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> two_divisor_witness(std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0) throw PreconditionViolated("sum_of_two_divisors: arguments must be positive");
    const auto ds = divisors(m);
    for (std::uint64_t d : ds) {
        if (2 * d > n) break;
        if (m % (n - d) == 0) return std::make_pair(d, n - d);
    }
    return std::nullopt;
}

bool sum_of_two_divisors(std::uint64_t n, std::uint64_t m) { return two_divisor_witness(n, m).has_value(); }

E7Degree4Analysis e7_degree4_analysis(const WeylTable& data) {
    const WeylDatum& levi = data.datum("E7.d4");
    const WeylDatum& torus = data.datum("E7.d4.T");
    if (!levi.classes || !torus.order) throw PreconditionViolated("e7_degree4_analysis: incomplete E7.d4 data");
    E7Degree4Analysis a;
    a.classes = *levi.classes;
    a.torus_weyl = *torus.order;
    const std::uint64_t y3 = 3;
    a.large_y_holds = (a.classes * y3) * (a.classes * y3) >= a.torus_weyl * y3;
    for (std::uint64_t y : {1, 2}) {
        auto& list = y == 1 ? a.primes_y1 : a.primes_y2;
        for (std::uint64_t p : primes_in(a.classes * y + 1, a.torus_weyl * y)) {
            if (p * p - 1 <= a.torus_weyl * y) list.push_back(p);
        }
    }
    a.y1_non_divisible = std::all_of(a.primes_y1.begin(), a.primes_y1.end(),
                                     [&](std::uint64_t p) { return a.torus_weyl % (p * p - 1) != 0; });
    a.y2_no_two_divisor_sum = std::all_of(a.primes_y2.begin(), a.primes_y2.end(),
                                          [&](std::uint64_t p) { return !sum_of_two_divisors(p * p - 1, a.torus_weyl); });
    return a;
}

} // namespace frobkit
