#include "frobkit/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

// Gaps of the mod-30 wheel starting at 7: 7, 11, 13, 17, 19, 23, 29, 31, ...
constexpr std::array<std::uint64_t, 8> kWheelGaps{4, 2, 4, 2, 4, 6, 2, 6};

void divide_out(std::uint64_t& n, std::uint64_t p, Factorization& f) {
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw PreconditionViolated("factorize: n must be positive");
    Factorization f;
    f.value = n;
    for (std::uint64_t p : {2u, 3u, 5u}) divide_out(n, p, f);
    std::uint64_t p = 7;
    std::size_t gap = 0;
    while (p <= n / p) {
        divide_out(n, p, f);
        p += kWheelGaps[gap];
        gap = (gap + 1) % kWheelGaps.size();
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    const auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto f = factorize(q);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors[0];
}

int moebius(std::uint64_t n) {
    const auto f = factorize(n);
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (const auto& pp : factorize(n).factors) result = result / pp.prime * (pp.prime - 1);
    return result;
}

std::uint64_t jordan_totient2(std::uint64_t n) {
    std::uint64_t result = n * n;
    for (const auto& pp : factorize(n).factors) {
        const std::uint64_t sq = pp.prime * pp.prime;
        result = result / sq * (sq - 1);
    }
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& pp : factorize(n).factors) {
        const std::size_t base = out.size();
        std::uint64_t power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t multiplicative_order(std::int64_t q, std::uint64_t m) {
    if (m == 0) throw PreconditionViolated("multiplicative_order: modulus must be positive");
    if (m == 1) return 1;
    const auto mm = static_cast<std::int64_t>(m);
    const auto r = static_cast<std::uint64_t>(((q % mm) + mm) % mm);
    if (gcd(r, m) != 1) {
        throw NotCoprime("multiplicative_order: gcd(" + std::to_string(q) + ", " + std::to_string(m) +
                         ") != 1");
    }
    // The order divides phi(m); strip prime factors while the power stays 1.
    std::uint64_t order = euler_phi(m);
    for (const auto& pp : factorize(order).factors) {
        for (unsigned e = 0; e < pp.exponent; ++e) {
            if (powmod(r, order / pp.prime, m) == 1) {
                order /= pp.prime;
            } else {
                break;
            }
        }
    }
    return order;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

BigInt ipow(std::uint64_t base, std::uint64_t exp) { return ipow(BigInt(base), exp); }

BigInt cyclotomic_value(std::uint64_t d, const BigInt& q) {
    if (d == 0) throw PreconditionViolated("cyclotomic_value: d must be positive");
    if (q < 2) throw PreconditionViolated("cyclotomic_value: q must be at least 2");
    BigInt numerator = 1;
    BigInt denominator = 1;
    for (std::uint64_t e : divisors(d)) {
        const int mu = moebius(e);
        if (mu == 0) continue;
        const BigInt term = ipow(q, d / e) - 1;
        if (mu > 0) {
            numerator *= term;
        } else {
            denominator *= term;
        }
    }
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw NonIntegral("cyclotomic_value: inexact division for d=" + std::to_string(d));
    }
    return quotient;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n).factors) out.push_back(pp.prime);
    return out;
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
        throw PreconditionViolated("value does not fit in 64 bits");
    }
    return v.convert_to<std::uint64_t>();
}

} // namespace frobkit
