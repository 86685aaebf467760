#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "frobkit/errors.hpp"
#include "frobkit/matgroups.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

using KeySet = std::vector<Key>;

bool regular_on_nonzero(const FiniteGroup& e, std::uint64_t p) {
    const Key id = identity_matrix_key(p, 2);
    for (Key m : e.elements()) {
        if (m != id && !fixed_point_free(m, p, 2)) return false;
    }
    std::set<Entries> orbit;
    for (Key m : e.elements()) orbit.insert(apply_matrix(m, {1, 0}, p, 2));
    return orbit.size() == p * p - 1 && e.order() == p * p - 1;
}

/// Conjugacy-canonical form: lexicographically least conjugate element set.
KeySet canonical(const FiniteGroup& gl, const KeySet& elems) {
    KeySet best;
    for (Key g : gl.elements()) {
        const Key gi = gl.invert(g);
        KeySet c;
        c.reserve(elems.size());
        for (Key x : elems) c.push_back(gl.multiply(gl.multiply(gi, x), g));
        std::sort(c.begin(), c.end());
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

/// Class counts of all regular subgroups up to conjugacy generated by at
/// most `arity` elements, by exhaustive enumeration.
std::multiset<std::uint64_t> brute_regular(std::uint64_t p, unsigned arity) {
    const auto gl = general_linear(p, 2);
    const auto& o = gl.oracle();
    const std::size_t target = p * p - 1;
    std::set<KeySet> subgroups;
    std::vector<Key> pool(gl.elements().begin(), gl.elements().end());
    auto consider = [&](const std::vector<Key>& gens) {
        try {
            auto h = generate(gens, o, target);
            if (h.order() != target || !regular_on_nonzero(h, p)) return;
            subgroups.insert(KeySet(h.elements().begin(), h.elements().end()));
        } catch (const CapExceeded&) {
        }
    };
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
            if (arity == 2) {
                consider({pool[i], pool[j]});
                continue;
            }
            for (std::size_t k = j; k < pool.size(); ++k) consider({pool[i], pool[j], pool[k]});
        }
    }
    std::set<KeySet> classes;
    for (const auto& s : subgroups) classes.insert(canonical(gl, s));
    std::multiset<std::uint64_t> out;
    for (const auto& s : classes) {
        const FiniteGroup h(o, {}, s);
        out.insert(oracle::class_count(h));
    }
    return out;
}

std::multiset<std::uint64_t> searched(std::uint64_t p, unsigned workers = 1) {
    RegularSearchOptions opt;
    opt.workers = workers;
    std::multiset<std::uint64_t> out;
    for (const auto& r : find_regular_subgroups(p, opt)) out.insert(r.class_count);
    return out;
}

} // namespace

TEST_CASE("matrix keys") {
    const Key k = matrix_key({1, 2, 3, 4}, 5);
    CHECK(k == ((1 * 5 + 2) * 5 + 3) * 5 + 4);
    CHECK(matrix_entries(k, 5, 2) == Entries{1, 2, 3, 4});
    CHECK(identity_matrix_key(7, 2) == matrix_key({1, 0, 0, 1}, 7));
    CHECK(determinant(k, 5, 2) == (4 + 5 * 5 - 6) % 5);
    const auto [v, m] = affine_parts(affine_key({3, 1}, k, 5, 2), 5, 2);
    CHECK(v == Entries{3, 1});
    CHECK(m == k);
    CHECK(apply_matrix(k, {1, 0}, 5, 2) == Entries{1, 3});
}

TEST_CASE("fixed-point-free matrices") {
    CHECK_FALSE(fixed_point_free(identity_matrix_key(5, 2), 5, 2));
    CHECK(fixed_point_free(matrix_key({10, 0, 0, 10}, 11), 11, 2));
    CHECK_FALSE(fixed_point_free(matrix_key({1, 0, 0, 2}, 5), 5, 2));
    // Agrees with the absence of a nonzero fixed vector.
    for (Key m : general_linear(5, 2).elements()) {
        bool fixes = false;
        for (std::uint64_t a = 0; a < 5; ++a)
            for (std::uint64_t b = 0; b < 5; ++b)
                if ((a || b) && apply_matrix(m, {a, b}, 5, 2) == Entries{a, b}) fixes = true;
        CHECK(fixed_point_free(m, 5, 2) == !fixes);
    }
}

TEST_CASE("linear groups") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        CHECK(general_linear(p, 2).order() == (p * p - 1) * (p * p - p));
        CHECK(special_linear2(p).order() == p * (p * p - 1));
        CHECK(general_linear(p, 1).order() == p - 1);
    }
    CHECK(conjugacy_classes(general_linear(3, 2)).classes.size() == 8);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(2) == 1);
}

TEST_CASE("metacyclic Frobenius groups") {
    auto r = class_report(frobenius_metacyclic(5, 4), 5);
    CHECK(r.order == 20);
    CHECK(r.k_p_prime == 4);
    r = class_report(frobenius_metacyclic(7, 3), 7);
    CHECK(r.order == 21);
    CHECK(r.k_p_prime == 3);
    CHECK(r.k_p == 3);
    for (std::uint64_t p : {2, 3, 13}) {
        r = class_report(frobenius_metacyclic(p, 1), p);
        CHECK(r.class_count == p);
        CHECK(r.k_p_prime == 1);
    }
    CHECK_THROWS_AS(frobenius_metacyclic(7, 4), InvalidDivisor);
    CHECK_THROWS_AS(frobenius_metacyclic(8, 1), PreconditionViolated);
}

TEST_CASE("affine Frobenius groups") {
    const auto trivial = matrix_group({}, 7, 1);
    const auto cp = frobenius_affine(7, 1, trivial);
    CHECK(cp.order() == 7);
    CHECK(conjugacy_classes(cp).classes.size() == 7);
    const auto sl23 = special_linear2(3);
    (void)sl23;
    for (const auto& rec : find_regular_subgroups(5)) {
        if (rec.class_count != 7) continue;
        const auto e = matrix_group(rec.generators, 5, 2);
        const auto g = frobenius_affine(5, 2, e);
        const auto r = class_report(g, 5);
        CHECK(r.order == 600);
        CHECK(r.class_count == 8);
        CHECK(r.k_p == 2);
        CHECK(r.k_p_prime == 7);
    }
}

TEST_CASE("regular subgroups match exhaustive enumeration") {
    CHECK(searched(3) == brute_regular(3, 3));
    CHECK(searched(5) == brute_regular(5, 2));
}

TEST_CASE("regular subgroup search") {
    CHECK(searched(5) == std::multiset<std::uint64_t>{7, 12, 24});
    CHECK(searched(7) == std::multiset<std::uint64_t>{8, 21, 48});
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        const auto recs = find_regular_subgroups(p);
        RegularSearchOptions opt;
        opt.workers = 4;
        CHECK(find_regular_subgroups(p, opt) == recs);
        for (const auto& rec : recs) {
            const auto e = matrix_group(rec.generators, p, 2);
            CHECK(e.order() == rec.order);
            CHECK(regular_on_nonzero(e, p));
            const auto ec = conjugacy_classes(e);
            CHECK(ec.classes.size() == rec.class_count);
            CHECK(order_statistics(e, ec) == rec.order_stats);
            if (p <= 7) {
                const auto r = class_report(frobenius_affine(p, 2, e), p);
                CHECK(r.class_count == rec.class_count + 1);
                CHECK(r.k_p_prime == rec.class_count);
            }
        }
        CHECK(std::is_sorted(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
            return std::tie(a.class_count, a.order_stats) < std::tie(b.class_count, b.order_stats);
        }));
    }
    CHECK_THROWS_AS(find_regular_subgroups(37), CapExceeded);
    CHECK_THROWS_AS(find_regular_subgroups(2), PreconditionViolated);
}

TEST_CASE("near-field image is one of the found subgroups") {
    for (std::uint64_t p : {3, 5, 7, 11}) {
        const auto gl = general_linear(p, 2);
        const std::uint64_t lb = to_u64(closed_form_lB({p, 1, 2}));
        for (unsigned rank : {0u, 1u}) {
            const auto nf = nearfield_matrix_group(p, rank);
            CHECK(nf.order() == p * p - 1);
            CHECK(conjugacy_classes(nf).classes.size() == lb);
            bool matched = false;
            for (const auto& rec : find_regular_subgroups(p)) {
                if (rec.class_count != lb) continue;
                matched = find_conjugator(gl, nf, matrix_group(rec.generators, p, 2)).has_value();
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("semilinear matrices form a homomorphism") {
    for (std::uint64_t p : {3, 5, 7}) {
        const GaloisField field(p, 2);
        const auto gamma = semilinear_group(p, 2);
        const auto o = matrix_oracle(p, 2);
        for (Key x : gamma.elements()) {
            for (Key y : gamma.elements()) {
                const Key lhs = semilinear_matrix(field, semilinear_pair(gamma.multiply(x, y), 2));
                const Key rhs = o.multiply(semilinear_matrix(field, semilinear_pair(x, 2)),
                                           semilinear_matrix(field, semilinear_pair(y, 2)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("exceptional group of order 14520") {
    const auto g = exceptional_11();
    const auto r = class_report(g, 11);
    CHECK(r.order == 14520);
    CHECK(r.class_count == 10);
    CHECK(r.k_p == 2);
    CHECK(r.k_p_prime == 9);
    for (const auto& rec : find_regular_subgroups(11)) {
        if (rec.class_count != 9) continue;
        std::set<std::uint64_t> orders;
        for (auto [o, c] : rec.order_stats) orders.insert(o);
        CHECK(orders == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 10});
    }
}

TEST_CASE("alternating cycle count") {
    CHECK(alternating_cycle_count(10, 5) == 5);
    CHECK(alternating_cycle_count(14, 7) == 7);
    for (std::uint64_t p : primes_in(5, 97)) CHECK(alternating_cycle_count(2 * p, p) >= p);
    CHECK_THROWS_AS(alternating_cycle_count(9, 5), PreconditionViolated);
}
