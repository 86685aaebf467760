#pragma once

// Exact integer number theory: factorizations, multiplicative functions,
// multiplicative orders and cyclotomic values.
//
// Word-sized inputs use std::uint64_t; anything that grows like q^n is a
// BigInt so that no intermediate ever wraps.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Returns (prime, exponent) if q = prime^exponent with exponent >= 1.
std::optional<PrimePower> prime_power(std::uint64_t q);

int moebius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// J_2(n) = n^2 * prod_{p | n} (1 - 1/p^2).
std::uint64_t jordan_totient2(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Least t >= 1 with q^t = 1 (mod m). Throws NotCoprime if gcd(q, m) != 1.
std::uint64_t multiplicative_order(std::int64_t q, std::uint64_t m);

BigInt ipow(const BigInt& base, std::uint64_t exp);
BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// Phi_d(q) via prod_{e | d} (q^{d/e} - 1)^{mu(e)}; the final division is
/// checked to be exact.
BigInt cyclotomic_value(std::uint64_t d, const BigInt& q);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Narrowing conversion; throws PreconditionViolated if v is negative or
/// does not fit.
std::uint64_t to_u64(const BigInt& v);

} // namespace frobkit
