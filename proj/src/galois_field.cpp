#include "frobkit/galois_field.hpp"

#include <string>

#include "frobkit/errors.hpp"
#include "frobkit/numtheory.hpp"

namespace frobkit {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = powmod(f.back(), p - 2, p);
    while (a.size() > df) {
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(base, f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return poly_mod(result, f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_mod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// x^(p^j) mod f by repeated p-th powering.
Poly frobenius_x(std::uint64_t j, const Poly& f, std::uint64_t p) {
    Poly r = poly_mod(Poly{0, 1}, f, p);
    for (std::uint64_t i = 0; i < j; ++i) r = poly_powmod(r, p, f, p);
    return r;
}

Poly digits(std::uint64_t v, std::uint64_t p, unsigned d) {
    Poly out(d, 0);
    for (unsigned i = 0; i < d; ++i) {
        out[i] = v % p;
        v /= p;
    }
    return out;
}

std::uint64_t undigits(const Poly& a, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

// The canonical order reads c0 as the most significant digit.
Poly canonical_digits(std::uint64_t rank, std::uint64_t p, unsigned d) {
    Poly out(d, 0);
    for (unsigned i = d; i-- > 0;) {
        out[i] = rank % p;
        rank /= p;
    }
    return out;
}

} // namespace

bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
    Poly f = monic;
    trim(f);
    if (f.size() < 2) return false;
    const std::uint64_t d = f.size() - 1;
    if (d == 1) return true;
    if (poly_sub(frobenius_x(d, f, p), Poly{0, 1}, p).size() != 0) return false;
    for (std::uint64_t r : prime_divisors(d)) {
        const Poly g = poly_gcd(f, poly_sub(frobenius_x(d / r, f, p), Poly{0, 1}, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned degree) {
    if (!is_prime(p)) throw PreconditionViolated("smallest_irreducible: p must be prime");
    if (degree == 0) throw PreconditionViolated("smallest_irreducible: degree must be positive");
    const BigInt count = ipow(p, degree);
    for (std::uint64_t rank = 0; rank < to_u64(count); ++rank) {
        Poly f = canonical_digits(rank, p, degree);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw NoSolution("smallest_irreducible: none found");
}

GaloisField::GaloisField(std::uint64_t p, unsigned degree, unsigned primitive_rank, std::uint64_t size_cap)
    : p_(p), degree_(degree) {
    if (!is_prime(p)) throw PreconditionViolated("GaloisField: p must be prime");
    if (degree == 0) throw PreconditionViolated("GaloisField: degree must be positive");
    const BigInt size = ipow(p, degree);
    if (size > size_cap) {
        throw CapExceeded("GaloisField: field of order " + size.str() + " exceeds cap " + std::to_string(size_cap));
    }
    size_ = to_u64(size);
    modulus_ = smallest_irreducible(p, degree);
    const std::uint64_t m = size_ - 1;
    const auto m_primes = prime_divisors(m);

    Poly zeta;
    unsigned seen = 0;
    for (std::uint64_t rank = 1; rank < size_ && zeta.empty(); ++rank) {
        Poly cand = canonical_digits(rank, p, degree);
        trim(cand);
        if (cand.empty()) continue;
        bool primitive = true;
        for (std::uint64_t r : m_primes) {
            if (poly_powmod(cand, m / r, modulus_, p) == Poly{1}) {
                primitive = false;
                break;
            }
        }
        if (m == 1) primitive = cand == Poly{1};
        if (primitive && seen++ == primitive_rank) zeta = cand;
    }
    if (zeta.empty()) throw NoSolution("GaloisField: primitive_rank exceeds number of primitive elements");

    exp_.assign(m, 0);
    log_.assign(size_, 0);
    Poly cur{1};
    for (std::uint64_t k = 0; k < m; ++k) {
        Poly padded = cur;
        padded.resize(degree, 0);
        exp_[k] = undigits(padded, p);
        log_[exp_[k]] = k;
        cur = poly_mulmod(cur, zeta, modulus_, p);
    }
    zech_.assign(m, m);
    for (std::uint64_t b = 0; b < m; ++b) {
        // Adding 1 only touches the constant digit.
        const std::uint64_t v = exp_[b];
        const std::uint64_t c0 = v % p;
        const std::uint64_t w = v - c0 + (c0 + 1) % p;
        if (w != 0) zech_[b] = log_[w];
    }
}

std::uint64_t GaloisField::log_vector(std::uint64_t v) const {
    if (v == 0 || v >= size_) throw PreconditionViolated("log_vector: argument must be a nonzero field element");
    return log_[v];
}

LogCode GaloisField::add(LogCode a, LogCode b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint64_t m = units();
    const std::uint64_t la = a - 1;
    const std::uint64_t lb = b - 1;
    const std::uint64_t z = zech_[(lb + m - la) % m];
    if (z == m) return 0;
    return 1 + (la + z) % m;
}

LogCode GaloisField::negate(LogCode a) const {
    if (a == 0 || p_ == 2) return a;
    const std::uint64_t m = units();
    return 1 + (a - 1 + m / 2) % m;
}

LogCode GaloisField::multiply(LogCode a, LogCode b) const {
    if (a == 0 || b == 0) return 0;
    return 1 + (a - 1 + b - 1) % units();
}

LogCode GaloisField::frobenius(LogCode a, unsigned j) const {
    if (a == 0) return 0;
    const std::uint64_t m = units();
    return 1 + mulmod(a - 1, powmod(p_, j, m), m);
}

std::uint64_t GaloisField::add_vectors(std::uint64_t a, std::uint64_t b) const {
    Poly x = digits(a, p_, degree_);
    const Poly y = digits(b, p_, degree_);
    for (unsigned i = 0; i < degree_; ++i) x[i] = (x[i] + y[i]) % p_;
    return undigits(x, p_);
}

std::uint64_t GaloisField::multiply_vectors(std::uint64_t a, std::uint64_t b) const {
    Poly r = poly_mulmod(digits(a, p_, degree_), digits(b, p_, degree_), modulus_, p_);
    r.resize(degree_, 0);
    return undigits(r, p_);
}

} // namespace frobkit
