#pragma once

// Slow reference implementations used only to cross-check the library.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "frobkit/grouplib.hpp"

namespace oracle {

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::map<std::uint64_t, std::uint64_t> factor(std::uint64_t n) {
    std::map<std::uint64_t, std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

inline std::uint64_t phi(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t a = 1; a <= n; ++a) c += gcd(a, n) == 1;
    return c;
}

/// Pairs (a, b) mod n with gcd(a, b, n) = 1.
inline std::uint64_t jordan2(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) c += gcd(gcd(a, b), n) == 1;
    }
    return c;
}

inline std::uint64_t order_mod(std::uint64_t q, std::uint64_t m) {
    if (m == 1) return 1;
    std::uint64_t x = q % m;
    for (std::uint64_t t = 1;; ++t) {
        if (x == 1) return t;
        x = x * (q % m) % m;
    }
}

/// All-pairs conjugacy classes: g ~ h iff h = x^-1 g x for some x in G.
inline std::size_t class_count(const frobkit::FiniteGroup& g) {
    const auto& o = g.oracle();
    std::set<frobkit::Key> seen;
    std::size_t classes = 0;
    for (frobkit::Key e : g.elements()) {
        if (seen.count(e)) continue;
        ++classes;
        for (frobkit::Key x : g.elements()) seen.insert(o.multiply(o.multiply(o.invert(x), e), x));
    }
    return classes;
}

inline std::vector<std::set<frobkit::Key>> classes(const frobkit::FiniteGroup& g) {
    const auto& o = g.oracle();
    std::set<frobkit::Key> seen;
    std::vector<std::set<frobkit::Key>> out;
    for (frobkit::Key e : g.elements()) {
        if (seen.count(e)) continue;
        std::set<frobkit::Key> c;
        for (frobkit::Key x : g.elements()) c.insert(o.multiply(o.multiply(o.invert(x), e), x));
        seen.insert(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace oracle
