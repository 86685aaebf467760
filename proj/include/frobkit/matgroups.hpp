#pragma once

// Matrix and affine groups over prime fields.
//
// A dim x dim matrix is keyed by its row-major entries read as base-p digits,
// entry (0,0) most significant. An affine map x -> Mx + v is keyed as
// vector_key(v) * p^(dim^2) + matrix_key(M), with v_0 most significant.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frobkit/grouplib.hpp"
#include "frobkit/nearfield.hpp"

namespace frobkit {

inline constexpr unsigned kMaxMatrixDim = 3;

using Entries = std::vector<std::uint64_t>;

Key matrix_key(const Entries& row_major, std::uint64_t p);
Entries matrix_entries(Key key, std::uint64_t p, unsigned dim);
Key identity_matrix_key(std::uint64_t p, unsigned dim);

GroupOracle matrix_oracle(std::uint64_t p, unsigned dim);
GroupOracle affine_oracle(std::uint64_t p, unsigned dim);

Key affine_key(const Entries& translation, Key matrix, std::uint64_t p, unsigned dim);
std::pair<Entries, Key> affine_parts(Key key, std::uint64_t p, unsigned dim);

/// M x for a column vector x.
Entries apply_matrix(Key matrix, const Entries& x, std::uint64_t p, unsigned dim);

std::uint64_t determinant(Key matrix, std::uint64_t p, unsigned dim);

/// det(M - I) != 0.
bool fixed_point_free(Key matrix, std::uint64_t p, unsigned dim);

std::uint64_t smallest_primitive_root(std::uint64_t p);

FiniteGroup general_linear(std::uint64_t p, unsigned dim, std::size_t cap = kDefaultElementCap);
FiniteGroup special_linear2(std::uint64_t p, std::size_t cap = kDefaultElementCap);

/// Subgroup of GL(dim, p) generated by the given matrix keys.
FiniteGroup matrix_group(std::vector<Key> generators, std::uint64_t p, unsigned dim,
                         std::size_t cap = kDefaultElementCap);

/// C_p x| C_t with the complement generated by g^((p-1)/t), g the smallest
/// primitive root. Throws InvalidDivisor unless t | p - 1.
FiniteGroup frobenius_metacyclic(std::uint64_t p, std::uint64_t t, std::size_t cap = kDefaultElementCap);

/// V x| E with V = F_p^dim.
FiniteGroup frobenius_affine(std::uint64_t p, unsigned dim, const FiniteGroup& complement,
                             std::size_t cap = kDefaultElementCap);

struct RegularSubgroupRecord {
    std::uint64_t p = 0;
    std::vector<Key> generators;
    std::uint64_t order = 0;
    std::uint64_t class_count = 0;
    /// Sorted (element order, count) pairs.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> order_stats;

    friend bool operator==(const RegularSubgroupRecord&, const RegularSubgroupRecord&) = default;
};

struct RegularSearchOptions {
    unsigned workers = 1;
    /// Admit p in {23, 29, 59} beyond the default limit; raises the element
    /// cap to fit GL(2, 59).
    bool extended = false;
    std::size_t cap = kDefaultElementCap;
};

inline constexpr std::uint64_t kRegularSearchDefaultMaxP = 31;
inline constexpr std::size_t kExtendedElementCap = 16'000'000;

/// One record per GL(2,p)-conjugacy class of subgroups of order p^2 - 1
/// acting regularly on nonzero vectors, sorted by (class_count, order_stats).
std::vector<RegularSubgroupRecord> find_regular_subgroups(std::uint64_t p, const RegularSearchOptions& options = {});

/// C_11^2 x| SL(2,5) built from the regular subgroup with 9 classes.
FiniteGroup exceptional_11(unsigned workers = 1);

/// Matrix of (a, i) in GammaL(1, p^2) acting on F_p[x]/(f) in the basis
/// {1, x}, with f and zeta as chosen by GaloisField(p, 2).
Key semilinear_matrix(const GaloisField& field, SemilinearPair s);

/// The image of nearfield_group(p, 1, 2) in GL(2, p).
FiniteGroup nearfield_matrix_group(std::uint64_t p, unsigned primitive_rank = 0);

/// Some g in GL(2,p) with g^-1 A g = B, if one exists. Both groups must have
/// the same order.
std::optional<Key> find_conjugator(const FiniteGroup& gl, const FiniteGroup& a, const FiniteGroup& b);

/// Number of odd m <= n with p not dividing m, plus one for an involution
/// class. Throws PreconditionViolated if n < 2p.
std::uint64_t alternating_cycle_count(std::uint64_t n, std::uint64_t p);

} // namespace frobkit
