#pragma once

// Finite field of order p^d built as F_p[x]/(f), with discrete-log and Zech
// tables relative to a fixed primitive element zeta.
//
// Two encodings are used:
//   * vector code: the coefficient vector read as a little-endian base-p
//     integer (c0 + c1*p + ...);
//   * log code: 0 for the zero element, 1 + log_zeta(x) otherwise. Affine
//     group keys are built from log codes.
//
// Both f and zeta are chosen canonically: elements and monic polynomials are
// ordered lexicographically by (c0, c1, ...), and the smallest admissible one
// wins.

#include <cstdint>
#include <vector>

namespace frobkit {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 18;

using LogCode = std::uint64_t;

class GaloisField {
public:
    /// primitive_rank selects the (rank+1)-th primitive element in canonical
    /// order, so alternative zeta choices can be compared.
    GaloisField(std::uint64_t p, unsigned degree, unsigned primitive_rank = 0,
                std::uint64_t size_cap = kDefaultFieldCap);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint64_t size() const { return size_; }
    /// Order of the multiplicative group.
    std::uint64_t units() const { return size_ - 1; }

    /// Monic modulus, coefficients low degree first (length degree + 1).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    std::uint64_t primitive_vector() const { return exp_[1 % units()]; }

    std::uint64_t exp_vector(std::uint64_t k) const { return exp_[k % units()]; }
    /// Discrete log of a nonzero vector code.
    std::uint64_t log_vector(std::uint64_t v) const;
    /// log(1 + zeta^b), or units() when 1 + zeta^b = 0.
    std::uint64_t zech(std::uint64_t b) const { return zech_[b % units()]; }

    LogCode from_vector(std::uint64_t v) const { return v == 0 ? 0 : 1 + log_vector(v); }
    std::uint64_t to_vector(LogCode c) const { return c == 0 ? 0 : exp_[c - 1]; }

    LogCode add(LogCode a, LogCode b) const;
    LogCode negate(LogCode a) const;
    LogCode multiply(LogCode a, LogCode b) const;
    /// x -> x^(p^j).
    LogCode frobenius(LogCode a, unsigned j) const;

    std::uint64_t add_vectors(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t multiply_vectors(std::uint64_t a, std::uint64_t b) const;

private:
    std::uint64_t p_;
    unsigned degree_;
    std::uint64_t size_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> exp_;
    std::vector<std::uint64_t> log_;
    std::vector<std::uint64_t> zech_;
};

/// Smallest monic irreducible of the given degree over F_p in canonical
/// order (low-degree coefficients most significant).
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned degree);

bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p);

} // namespace frobkit
