#pragma once

// Dickson near-field multiplicative groups inside the semilinear group
// (Z/m) x| (Z/n), m = q^n - 1, together with their class-count formulas and
// the sharply 2-transitive affine groups they define.
//
// A semilinear pair (a, i) stands for x -> zeta^a * x^(q^i) and is keyed as
// a * n + i.

#include <cstdint>
#include <memory>

#include "frobkit/galois_field.hpp"
#include "frobkit/grouplib.hpp"
#include "frobkit/numtheory.hpp"

namespace frobkit {

struct DicksonParams {
    std::uint64_t p = 0;
    std::uint64_t k = 1;
    std::uint64_t n = 1;

    std::uint64_t q() const;
    std::uint64_t d() const { return n * k; }
    BigInt order() const;

    friend bool operator==(const DicksonParams&, const DicksonParams&) = default;
};

bool dickson_condition(std::uint64_t p, std::uint64_t k, std::uint64_t n);
inline bool dickson_condition(const DicksonParams& dp) { return dickson_condition(dp.p, dp.k, dp.n); }

/// The exponent t in [0, n) with q^t = 1 + a(q-1) (mod (q-1)n).
std::uint64_t a_star(std::uint64_t a, std::uint64_t q, std::uint64_t n);

struct SemilinearPair {
    std::uint64_t a = 0;
    std::uint64_t i = 0;

    friend bool operator==(const SemilinearPair&, const SemilinearPair&) = default;
};

inline Key semilinear_key(SemilinearPair s, std::uint64_t n) { return s.a * n + s.i; }
inline SemilinearPair semilinear_pair(Key key, std::uint64_t n) { return {key / n, key % n}; }

/// Oracle on keys of (Z/(q^n-1)) x| (Z/n).
GroupOracle semilinear_oracle(std::uint64_t q, std::uint64_t n);

/// The whole of GammaL(1, q^n) in the residue-pair model.
FiniteGroup semilinear_group(std::uint64_t q, std::uint64_t n, std::size_t cap = kDefaultElementCap);

/// F^x = {(a, a*(a))}. Throws PreconditionViolated if the Dickson condition
/// fails.
FiniteGroup nearfield_group(const DicksonParams& dp, std::size_t cap = kDefaultElementCap);

/// The kernel of (a, i) -> i, generated by (n, 0).
FiniteGroup gamma_kernel(const DicksonParams& dp, std::size_t cap = kDefaultElementCap);

BigInt alpha(std::uint64_t e, std::uint64_t q);
BigInt beta(std::uint64_t e, std::uint64_t q);

/// sum_{e | n} (n / e^2) alpha(e).
BigInt clifford_class_count(const DicksonParams& dp);

/// sum_{e | n} (q^e - 1) / (n e) * J2(n / e).
BigInt closed_form_lB(const DicksonParams& dp);

/// (q - 1) phi(n) + (q^n - 1) / n^2, a strict lower bound on l(B) for n > 1.
Rational lB_lower_bound(const DicksonParams& dp);

/// Log code of s(x) for a field element x given by its log code.
LogCode apply_semilinear(const GaloisField& field, SemilinearPair s, std::uint64_t q, LogCode x);

/// F x| F^x acting on the field of order q^n. Keys are
/// log_code(t) * (q^n - 1) + a for the pair (t, (a, a*(a))).
struct AffineNearfieldGroup {
    std::shared_ptr<const GaloisField> field;
    FiniteGroup group;
};

AffineNearfieldGroup sharply_2transitive_group(const DicksonParams& dp, unsigned primitive_rank = 0,
                                               std::size_t cap = kDefaultElementCap,
                                               std::uint64_t field_cap = kDefaultFieldCap);

} // namespace frobkit
