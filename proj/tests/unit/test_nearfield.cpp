#include <doctest.h>

#include <set>

#include "frobkit/errors.hpp"
#include "frobkit/nearfield.hpp"
#include "frobkit/verify.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

/// Image of the field point x (log code) under the affine key.
LogCode act(const AffineNearfieldGroup& g, const DicksonParams& dp, Key key, LogCode x) {
    const std::uint64_t m = g.field->units();
    const std::uint64_t a = key % m;
    const SemilinearPair s{a, a_star(a % dp.n, dp.q(), dp.n)};
    return g.field->add(key / m, apply_semilinear(*g.field, s, dp.q(), x));
}

} // namespace

TEST_CASE("Dickson condition") {
    CHECK(dickson_condition(5, 1, 1));
    CHECK(dickson_condition(3, 1, 2));
    CHECK_FALSE(dickson_condition(3, 1, 4));
    CHECK(dickson_condition(5, 1, 4));
    CHECK_FALSE(dickson_condition(2, 1, 2));
    CHECK(dickson_condition(2, 2, 3));
    CHECK_FALSE(dickson_condition(7, 1, 5));
}

TEST_CASE("a* congruence") {
    CHECK(a_star(0, 3, 2) == 0);
    CHECK(a_star(1, 3, 2) == 1);
    CHECK(a_star(2, 3, 2) == 0);
    for (const auto& dp : dickson_cases(5000)) {
        const std::uint64_t q = dp.q(), n = dp.n, mod = (q - 1) * n;
        for (std::uint64_t a = 0; a < n; ++a) {
            const std::uint64_t t = a_star(a, q, n);
            CHECK(t < n);
            CHECK(powmod(q, t, mod) == (1 + a * (q - 1)) % mod);
        }
    }
    CHECK_THROWS_AS(a_star(2, 3, 4), NoSolution);
}

TEST_CASE("near-field groups") {
    auto g = nearfield_group({3, 1, 2});
    CHECK(g.order() == 8);
    CHECK(oracle::class_count(g) == 5);
    std::set<std::uint64_t> orders;
    for (Key k : g.elements()) orders.insert(element_order(k, g.oracle()));
    CHECK(orders == std::set<std::uint64_t>{1, 2, 4}); // quaternion, not D8: a unique involution
    std::size_t involutions = 0;
    for (Key k : g.elements()) involutions += element_order(k, g.oracle()) == 2;
    CHECK(involutions == 1);

    g = nearfield_group({5, 1, 1});
    CHECK(g.order() == 4);
    CHECK(conjugacy_classes(g).classes.size() == 4);
    g = nearfield_group({5, 1, 2});
    CHECK(g.order() == 24);
    CHECK(oracle::class_count(g) == 12);

    CHECK_THROWS_AS(nearfield_group({3, 1, 4}), PreconditionViolated);
}

TEST_CASE("Gamma is onto Z/n with kernel A") {
    for (const auto& dp : dickson_cases(257)) {
        const auto g = nearfield_group(dp);
        const auto a = gamma_kernel(dp);
        CHECK(a.order() * dp.n == g.order());
        std::set<std::uint64_t> image;
        for (Key x : g.elements()) {
            const auto sx = semilinear_pair(x, dp.n);
            image.insert(sx.i);
            CHECK(a.contains(x) == (sx.i == 0));
            for (Key y : g.elements()) {
                const auto sxy = semilinear_pair(g.multiply(x, y), dp.n);
                CHECK(sxy.i == (sx.i + semilinear_pair(y, dp.n).i) % dp.n);
            }
        }
        CHECK(image.size() == dp.n);
        for (Key x : g.elements()) {
            for (Key y : a.elements()) CHECK(a.contains(g.multiply(g.multiply(g.invert(x), y), x)));
        }
    }
    CHECK(gamma_kernel({3, 1, 2}).order() == 4);
    CHECK(gamma_kernel({5, 1, 1}).order() == 4);
    CHECK(gamma_kernel({5, 1, 4}).order() == 156);
}

TEST_CASE("alpha and beta") {
    CHECK(alpha(1, 3) == 2);
    CHECK(alpha(2, 3) == 2);
    CHECK(beta(2, 5) == 12);
    for (std::uint64_t q : {3, 5, 7, 9, 13}) {
        for (std::uint64_t e : {1, 2, 4}) {
            if (e == 4 && (q - 1) % 4 != 0) continue;
            BigInt s = 0;
            for (std::uint64_t f : divisors(e)) s += alpha(f, q);
            CHECK(s == beta(e, q));
        }
    }
    CHECK_THROWS_AS(alpha(2, 2), NonIntegral);
}

TEST_CASE("class-count formulas") {
    CHECK(clifford_class_count({3, 1, 2}) == 5);
    CHECK(clifford_class_count({5, 1, 2}) == 12);
    CHECK(clifford_class_count({7, 1, 1}) == 6);
    CHECK(closed_form_lB({7, 1, 1}) == 6);
    CHECK(closed_form_lB({3, 1, 2}) == 5);
    CHECK(closed_form_lB({5, 1, 4}) == 60);
    CHECK(closed_form_lB({11, 1, 2}) == 45);
    for (const auto& dp : dickson_cases(626)) {
        const BigInt brute = oracle::class_count(nearfield_group(dp));
        CHECK(clifford_class_count(dp) == brute);
        CHECK(closed_form_lB(dp) == brute);
    }
}

TEST_CASE("closed form exceeds the stated bound for n > 1") {
    for (std::uint64_t q = 2; q <= 100; ++q) {
        const auto pp = prime_power(q);
        if (!pp) continue;
        for (std::uint64_t n = 1; n <= 12; ++n) {
            if (!dickson_condition(pp->prime, pp->exponent, n)) continue;
            const DicksonParams dp{pp->prime, pp->exponent, n};
            if (n == 1) {
                CHECK(closed_form_lB(dp) == q - 1);
                continue;
            }
            CHECK(Rational(closed_form_lB(dp)) > lB_lower_bound(dp));
        }
    }
}

TEST_CASE("sharply 2-transitive groups") {
    struct Example {
        DicksonParams dp;
        std::uint64_t order, k, kp_prime;
    };
    for (const auto& ex : {Example{{3, 1, 1}, 6, 3, 2}, Example{{3, 1, 2}, 72, 6, 5}, Example{{5, 1, 2}, 600, 13, 12}}) {
        const auto g = sharply_2transitive_group(ex.dp);
        const auto r = class_report(g.group, ex.dp.p);
        CHECK(r.order == ex.order);
        CHECK(r.class_count == ex.k);
        CHECK(r.k_p == 2);
        CHECK(r.k_p_prime == ex.kp_prime);
    }
    for (const auto& dp : dickson_cases(125)) {
        const auto g = sharply_2transitive_group(dp);
        const std::uint64_t size = g.field->size();
        // Each ordered pair of distinct points is hit by exactly one element.
        std::set<std::pair<LogCode, LogCode>> images;
        for (Key key : g.group.elements()) images.insert({act(g, dp, key, 0), act(g, dp, key, 1)});
        CHECK(images.size() == g.group.order());
        CHECK(g.group.order() == size * (size - 1));
        for (const auto& [u, v] : images) CHECK(u != v);
        // Non-identity complement elements fix only 0.
        for (Key key : g.group.elements()) {
            if (key == 0 || key / g.field->units() != 0) continue;
            for (LogCode x = 1; x < size; ++x) CHECK(act(g, dp, key, x) != x);
        }
        CHECK(conjugacy_classes(g.group).classes.size() == closed_form_lB(dp) + 1);
    }
}

TEST_CASE("class counts do not depend on the primitive element") {
    for (const DicksonParams dp : {DicksonParams{3, 1, 2}, DicksonParams{5, 1, 2}, DicksonParams{7, 1, 2},
                                   DicksonParams{2, 2, 3}, DicksonParams{3, 2, 2}}) {
        const auto a = sharply_2transitive_group(dp, 0);
        const auto b = sharply_2transitive_group(dp, 1);
        CHECK(a.field->primitive_vector() != b.field->primitive_vector());
        CHECK(conjugacy_classes(a.group).classes.size() == conjugacy_classes(b.group).classes.size());
        CHECK(class_report(b.group, dp.p).k_p == 2);
    }
}
