#include "frobkit/nearfield.hpp"

#include <string>
#include <vector>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

struct SemilinearTables {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> qpow; // q^i mod m, i in [0, n)
};

SemilinearTables make_tables(std::uint64_t q, std::uint64_t n) {
    if (q < 2 || n < 1) throw PreconditionViolated("semilinear group needs q >= 2 and n >= 1");
    SemilinearTables t;
    t.m = to_u64(ipow(q, n) - 1);
    t.n = n;
    for (std::uint64_t i = 0; i < n; ++i) t.qpow.push_back(powmod(q, i, t.m == 1 ? 2 : t.m) % t.m);
    return t;
}

SemilinearPair sl_mul(const SemilinearTables& t, SemilinearPair x, SemilinearPair y) {
    return {(x.a + mulmod(y.a, t.qpow[x.i], t.m)) % t.m, (x.i + y.i) % t.n};
}

SemilinearPair sl_inv(const SemilinearTables& t, SemilinearPair x) {
    const std::uint64_t i = (t.n - x.i) % t.n;
    return {(t.m - mulmod(x.a, t.qpow[i], t.m)) % t.m, i};
}

void require_dickson(const DicksonParams& dp) {
    if (!is_prime(dp.p) || dp.k < 1 || dp.n < 1) {
        throw PreconditionViolated("Dickson parameters need p prime and k, n >= 1");
    }
    if (!dickson_condition(dp)) {
        throw PreconditionViolated("Dickson condition fails for (p, k, n) = (" + std::to_string(dp.p) + ", " +
                                   std::to_string(dp.k) + ", " + std::to_string(dp.n) + ")");
    }
}

std::vector<std::uint64_t> a_star_table(std::uint64_t q, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < n; ++a) out.push_back(a_star(a, q, n));
    return out;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
    BigInt quo;
    BigInt rem;
    boost::multiprecision::divide_qr(num, den, quo, rem);
    if (rem != 0) throw NonIntegral(std::string(what) + ": inexact division " + num.str() + " / " + den.str());
    return quo;
}

} // namespace

std::uint64_t DicksonParams::q() const { return to_u64(ipow(p, k)); }

BigInt DicksonParams::order() const { return ipow(p, d()) - 1; }

bool dickson_condition(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
    const BigInt qm1 = ipow(p, k) - 1;
    for (std::uint64_t r : prime_divisors(n)) {
        if (qm1 % r != 0) return false;
    }
    return n % 4 != 0 || qm1 % 4 == 0;
}

std::uint64_t a_star(std::uint64_t a, std::uint64_t q, std::uint64_t n) {
    if (q < 2 || n < 1) throw PreconditionViolated("a_star: need q >= 2 and n >= 1");
    const std::uint64_t mod = (q - 1) * n;
    const std::uint64_t target = (1 + mulmod(a % n, q - 1, mod)) % mod;
    std::uint64_t power = 1 % mod;
    for (std::uint64_t t = 0; t < n; ++t) {
        if (power == target) return t;
        power = mulmod(power, q, mod);
    }
    throw NoSolution("a_star: no exponent for a=" + std::to_string(a) + ", q=" + std::to_string(q) +
                     ", n=" + std::to_string(n));
}

GroupOracle semilinear_oracle(std::uint64_t q, std::uint64_t n) {
    auto t = std::make_shared<const SemilinearTables>(make_tables(q, n));
    GroupOracle o;
    o.identity = 0;
    o.key_bound = t->m * n;
    o.multiply = [t](Key x, Key y) {
        return semilinear_key(sl_mul(*t, semilinear_pair(x, t->n), semilinear_pair(y, t->n)), t->n);
    };
    o.invert = [t](Key x) { return semilinear_key(sl_inv(*t, semilinear_pair(x, t->n)), t->n); };
    return o;
}

FiniteGroup semilinear_group(std::uint64_t q, std::uint64_t n, std::size_t cap) {
    const auto oracle = semilinear_oracle(q, n);
    std::vector<Key> gens;
    if (oracle.key_bound / n > 1) gens.push_back(semilinear_key({1, 0}, n));
    if (n > 1) gens.push_back(semilinear_key({0, 1}, n));
    return generate(gens, oracle, cap);
}

FiniteGroup nearfield_group(const DicksonParams& dp, std::size_t cap) {
    require_dickson(dp);
    const std::uint64_t q = dp.q();
    const std::uint64_t n = dp.n;
    const std::uint64_t m = to_u64(dp.order());
    if (m > cap) throw CapExceeded("nearfield_group: order " + std::to_string(m) + " exceeds cap");
    const auto oracle = semilinear_oracle(q, n);
    const auto star = a_star_table(q, n);

    // Greedy generating set: scan a upward and keep (a, a*(a)) whenever it is
    // not yet in the closure.
    std::vector<Key> gens;
    FiniteGroup g = generate(gens, oracle, cap);
    for (std::uint64_t a = 1; a < m && g.order() < m; ++a) {
        const Key key = semilinear_key({a, star[a % n]}, n);
        if (g.contains(key)) continue;
        gens.push_back(key);
        g = generate(gens, oracle, cap);
    }
    if (g.order() != m) {
        throw NoSolution("nearfield_group: closure has order " + std::to_string(g.order()) + ", expected " +
                         std::to_string(m));
    }
    for (Key key : g.elements()) {
        const auto s = semilinear_pair(key, n);
        if (s.i != star[s.a % n]) throw NoSolution("nearfield_group: closure leaves the set {(a, a*(a))}");
    }
    return g;
}

FiniteGroup gamma_kernel(const DicksonParams& dp, std::size_t cap) {
    require_dickson(dp);
    const auto oracle = semilinear_oracle(dp.q(), dp.n);
    const Key gen = semilinear_key({dp.n % to_u64(dp.order()), 0}, dp.n);
    return generate(std::vector<Key>{gen}, oracle, cap);
}

BigInt alpha(std::uint64_t e, std::uint64_t q) {
    BigInt total = 0;
    for (std::uint64_t f : divisors(e)) {
        const int mu = moebius(e / f);
        if (mu == 0) continue;
        const BigInt term = exact_quotient(ipow(q, f) - 1, f, "alpha");
        total += mu > 0 ? term : BigInt(-term);
    }
    return total;
}

BigInt beta(std::uint64_t e, std::uint64_t q) { return exact_quotient(ipow(q, e) - 1, e, "beta"); }

BigInt clifford_class_count(const DicksonParams& dp) {
    require_dickson(dp);
    const std::uint64_t q = dp.q();
    BigInt total = 0;
    for (std::uint64_t e : divisors(dp.n)) {
        total += exact_quotient(BigInt(dp.n) * alpha(e, q), BigInt(e) * e, "clifford_class_count");
    }
    return total;
}

BigInt closed_form_lB(const DicksonParams& dp) {
    require_dickson(dp);
    const std::uint64_t q = dp.q();
    Rational total = 0;
    for (std::uint64_t e : divisors(dp.n)) {
        total += Rational(ipow(q, e) - 1, BigInt(dp.n) * e) * jordan_totient2(dp.n / e);
    }
    if (boost::multiprecision::denominator(total) != 1) {
        throw NonIntegral("closed_form_lB: non-integral total " + total.str());
    }
    return boost::multiprecision::numerator(total);
}

Rational lB_lower_bound(const DicksonParams& dp) {
    const BigInt q = ipow(dp.p, dp.k);
    return Rational((q - 1) * euler_phi(dp.n)) + Rational(ipow(dp.p, dp.d()) - 1, BigInt(dp.n) * dp.n);
}

LogCode apply_semilinear(const GaloisField& field, SemilinearPair s, std::uint64_t q, LogCode x) {
    if (x == 0) return 0;
    const std::uint64_t m = field.units();
    const std::uint64_t lx = mulmod(x - 1, powmod(q, s.i, m), m);
    return 1 + (s.a + lx) % m;
}

AffineNearfieldGroup sharply_2transitive_group(const DicksonParams& dp, unsigned primitive_rank, std::size_t cap,
                                               std::uint64_t field_cap) {
    require_dickson(dp);
    auto field = std::make_shared<const GaloisField>(dp.p, static_cast<unsigned>(dp.d()), primitive_rank, field_cap);
    const std::uint64_t q = dp.q();
    const std::uint64_t n = dp.n;
    const std::uint64_t big_n = field->size();
    const std::uint64_t m = field->units();
    if (big_n * m > cap) {
        throw CapExceeded("sharply_2transitive_group: order " + std::to_string(big_n * m) + " exceeds cap");
    }
    auto tables = std::make_shared<const SemilinearTables>(make_tables(q, n));
    auto star = std::make_shared<const std::vector<std::uint64_t>>(a_star_table(q, n));

    auto pair_of = [tables, star](std::uint64_t a) { return SemilinearPair{a, (*star)[a % tables->n]}; };

    GroupOracle o;
    o.identity = 0;
    o.key_bound = big_n * m;
    o.multiply = [field, tables, pair_of, q, m](Key x, Key y) {
        const LogCode t1 = x / m;
        const LogCode t2 = y / m;
        const auto s1 = pair_of(x % m);
        const auto s2 = pair_of(y % m);
        const LogCode t = field->add(t1, apply_semilinear(*field, s1, q, t2));
        return t * m + sl_mul(*tables, s1, s2).a;
    };
    o.invert = [field, tables, pair_of, q, m](Key x) {
        const LogCode t = x / m;
        const auto s_inv = sl_inv(*tables, pair_of(x % m));
        const LogCode t_inv = apply_semilinear(*field, s_inv, q, field->negate(t));
        return t_inv * m + s_inv.a;
    };

    // Translation by 1 together with F^x generates the whole group.
    std::vector<Key> gens{m};
    const FiniteGroup complement = nearfield_group(dp, cap);
    for (Key g : complement.generators()) gens.push_back(semilinear_pair(g, n).a);
    FiniteGroup group = generate(gens, o, cap);
    return {std::move(field), std::move(group)};
}

} // namespace frobkit
