#include <doctest.h>

#include <cmath>
#include <set>

#include "frobkit/errors.hpp"
#include "frobkit/galois_field.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

// Schoolbook polynomial arithmetic mod (f, p) on little-endian vector codes.
std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, unsigned d) {
    std::vector<std::uint64_t> out(d);
    for (unsigned i = 0; i < d; ++i, v /= p) out[i] = v % p;
    return out;
}

std::uint64_t undigits(const std::vector<std::uint64_t>& c, std::uint64_t p) {
    std::uint64_t v = 0;
    for (unsigned i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const unsigned d = f.size() - 1;
    const auto x = digits(a, p, d), y = digits(b, p, d);
    std::vector<std::uint64_t> prod(2 * d, 0);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (unsigned k = 2 * d; k-- > d;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        for (unsigned i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * f[i]) % p;
    }
    prod.resize(d);
    return undigits(prod, p);
}

bool slow_root_free(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    // Irreducibility oracle for degree <= 3: no roots.
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (unsigned i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        if (v == 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("canonical modulus") {
    CHECK(smallest_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(smallest_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(smallest_irreducible(5, 1) == std::vector<std::uint64_t>{0, 1});
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned d : {2u, 3u}) {
            // First root-free monic polynomial with (c0, c1, ...) in lexicographic order.
            std::vector<std::uint64_t> first;
            std::uint64_t total = 1;
            for (unsigned i = 0; i < d; ++i) total *= p;
            for (std::uint64_t code = 0; code < total && first.empty(); ++code) {
                std::vector<std::uint64_t> g(d + 1, 1);
                std::uint64_t c = code;
                for (unsigned i = d; i-- > 0;) {
                    g[i] = c % p;
                    c /= p;
                }
                if (slow_root_free(g, p)) first = g;
            }
            CHECK(smallest_irreducible(p, d) == first);
        }
    }
    CHECK(is_irreducible({1, 1, 0, 0, 1}, 2));   // x^4 + x + 1
    CHECK_FALSE(is_irreducible({1, 0, 0, 0, 1}, 2)); // (x + 1)^4
    CHECK_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2)); // (x^2 + x + 1)^2, no roots
}

TEST_CASE("field tables agree with schoolbook arithmetic") {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {11, 1}}) {
        const GaloisField f(p, d);
        CHECK(f.size() == static_cast<std::uint64_t>(std::pow(p, d) + 0.5));
        std::set<std::uint64_t> powers;
        for (std::uint64_t k = 0; k < f.units(); ++k) powers.insert(f.exp_vector(k));
        CHECK(powers.size() == f.units());
        CHECK_FALSE(powers.count(0));
        for (std::uint64_t a = 0; a < f.size(); ++a) {
            for (std::uint64_t b = 0; b < f.size(); ++b) {
                const std::uint64_t prod = slow_mul(a, b, f.modulus(), p);
                CHECK(f.multiply_vectors(a, b) == prod);
                CHECK(f.to_vector(f.multiply(f.from_vector(a), f.from_vector(b))) == prod);
                auto x = digits(a, p, d), y = digits(b, p, d);
                for (unsigned i = 0; i < d; ++i) x[i] = (x[i] + y[i]) % p;
                const std::uint64_t sum = undigits(x, p);
                CHECK(f.add_vectors(a, b) == sum);
                CHECK(f.to_vector(f.add(f.from_vector(a), f.from_vector(b))) == sum);
            }
            const LogCode c = f.from_vector(a);
            CHECK(f.add(c, f.negate(c)) == 0);
        }
    }
}

TEST_CASE("Zech logarithms") {
    const GaloisField f(3, 2);
    for (std::uint64_t b = 0; b < f.units(); ++b) {
        const std::uint64_t s = f.add_vectors(1, f.exp_vector(b));
        if (s == 0) {
            CHECK(f.zech(b) == f.units());
        } else {
            CHECK(f.exp_vector(f.zech(b)) == s);
        }
    }
}

TEST_CASE("Frobenius is a field automorphism") {
    const GaloisField f(5, 2);
    for (LogCode a = 0; a < f.size(); ++a) {
        CHECK(f.frobenius(a, 0) == a);
        CHECK(f.frobenius(f.frobenius(a, 1), 1) == a);
        for (LogCode b = 0; b < f.size(); ++b) {
            CHECK(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
            CHECK(f.frobenius(f.multiply(a, b), 1) == f.multiply(f.frobenius(a, 1), f.frobenius(b, 1)));
        }
        if (a == 0) continue;
        LogCode acc = f.from_vector(1);
        for (int i = 0; i < 5; ++i) acc = f.multiply(acc, a);
        CHECK(f.frobenius(a, 1) == acc);
    }
}

TEST_CASE("alternative primitive elements") {
    const GaloisField a(7, 2, 0), b(7, 2, 1);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.primitive_vector() < b.primitive_vector());
    CHECK_THROWS_AS(GaloisField(2, 20), CapExceeded);
}
