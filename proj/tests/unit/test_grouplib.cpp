#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "frobkit/errors.hpp"
#include "frobkit/grouplib.hpp"
#include "frobkit/matgroups.hpp"
#include "frobkit/nearfield.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

GroupOracle cyclic_oracle(std::uint64_t n) {
    GroupOracle o;
    o.identity = 0;
    o.multiply = [n](Key a, Key b) { return (a + b) % n; };
    o.invert = [n](Key a) { return (n - a) % n; };
    o.key_bound = n;
    return o;
}

/// Symmetric group on m points; a permutation is keyed by its images in
/// base m, image of 0 most significant.
GroupOracle symmetric_oracle(unsigned m) {
    auto decode = [m](Key k) {
        std::vector<unsigned> v(m);
        for (unsigned i = m; i-- > 0;) {
            v[i] = static_cast<unsigned>(k % m);
            k /= m;
        }
        return v;
    };
    auto encode = [m](const std::vector<unsigned>& v) {
        Key k = 0;
        for (unsigned x : v) k = k * m + x;
        return k;
    };
    GroupOracle o;
    std::vector<unsigned> id(m);
    std::iota(id.begin(), id.end(), 0u);
    o.identity = encode(id);
    o.multiply = [=](Key a, Key b) {
        const auto x = decode(a), y = decode(b);
        std::vector<unsigned> r(m);
        for (unsigned i = 0; i < m; ++i) r[i] = x[y[i]];
        return encode(r);
    };
    o.invert = [=](Key a) {
        const auto x = decode(a);
        std::vector<unsigned> r(m);
        for (unsigned i = 0; i < m; ++i) r[x[i]] = i;
        return encode(r);
    };
    return o;
}

Key perm_key(const std::vector<unsigned>& v) {
    Key k = 0;
    for (unsigned x : v) k = k * v.size() + x;
    return k;
}

void check_partition(const FiniteGroup& g, unsigned workers = 1) {
    const auto part = conjugacy_classes(g, workers);
    const auto naive = oracle::classes(g);
    REQUIRE(part.classes.size() == naive.size());
    std::size_t total = 0;
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        const auto& cls = part.classes[c];
        total += cls.size;
        CHECK(g.order() % cls.size == 0);
        const auto it = std::find_if(naive.begin(), naive.end(),
                                     [&](const auto& s) { return s.count(cls.representative); });
        REQUIRE(it != naive.end());
        CHECK(it->size() == cls.size);
        CHECK(*it->begin() == cls.representative);
        if (c > 0) CHECK(part.classes[c - 1].representative < cls.representative);
    }
    CHECK(total == g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        const Key rep = part.classes[part.class_of[i]].representative;
        const auto it = std::find_if(naive.begin(), naive.end(), [&](const auto& s) { return s.count(rep); });
        CHECK(it->count(g.elements()[i]));
    }
}

} // namespace

TEST_CASE("generate") {
    const Key id = 0;
    CHECK(generate(std::span<const Key>(&id, 1), cyclic_oracle(6), 10).order() == 1);
    const Key one = 1;
    const auto c6 = generate(std::span<const Key>(&one, 1), cyclic_oracle(6), 100);
    CHECK(c6.order() == 6);
    CHECK(std::is_sorted(c6.elements().begin(), c6.elements().end()));
    CHECK_THROWS_AS(generate(std::span<const Key>(&one, 1), cyclic_oracle(50), 10), CapExceeded);
    // SL(2,3) from its two unipotent generators.
    CHECK(special_linear2(3).order() == 24);
}

TEST_CASE("sparse keys use the search path") {
    auto o = symmetric_oracle(5);
    const std::vector<Key> gens = {perm_key({1, 2, 3, 4, 0}), perm_key({1, 0, 2, 3, 4})};
    const auto s5 = generate(gens, o);
    CHECK(s5.order() == 120);
    CHECK(conjugacy_classes(s5).classes.size() == 7);
    for (Key k : s5.elements()) CHECK(s5.contains(k));
    CHECK_FALSE(s5.contains(perm_key({0, 0, 0, 0, 0})));
}

TEST_CASE("conjugacy classes agree with the all-pairs oracle") {
    const Key one = 1;
    check_partition(generate(std::span<const Key>(&one, 1), cyclic_oracle(12)));
    check_partition(special_linear2(3));
    check_partition(general_linear(3, 2));
    check_partition(frobenius_metacyclic(7, 3));
    check_partition(frobenius_metacyclic(13, 12));
    check_partition(nearfield_group({3, 1, 2}));
    check_partition(nearfield_group({5, 1, 2}));
    check_partition(semilinear_group(5, 2));
    auto s4 = generate(std::vector<Key>{perm_key({1, 2, 3, 0}), perm_key({1, 0, 2, 3})}, symmetric_oracle(4));
    check_partition(s4);
    check_partition(s4, 4);
}

TEST_CASE("class counts of named groups") {
    const Key one = 1;
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const auto c = generate(std::span<const Key>(&one, n > 1 ? 1 : 0), cyclic_oracle(n));
        CHECK(conjugacy_classes(c).classes.size() == n);
    }
    CHECK(conjugacy_classes(special_linear2(3)).classes.size() == 7);
    CHECK(conjugacy_classes(special_linear2(5)).classes.size() == 9);
    CHECK(oracle::class_count(special_linear2(5)) == 9);
}

TEST_CASE("worker count does not change the partition") {
    for (const auto& g : {general_linear(5, 2), semilinear_group(7, 2), frobenius_metacyclic(31, 30)}) {
        const auto a = conjugacy_classes(g, 1);
        for (unsigned w : {2u, 3u, 8u}) {
            const auto b = conjugacy_classes(g, w);
            REQUIRE(a.classes.size() == b.classes.size());
            for (std::size_t i = 0; i < a.classes.size(); ++i) {
                CHECK(a.classes[i].representative == b.classes[i].representative);
                CHECK(a.classes[i].size == b.classes[i].size);
            }
            CHECK(a.class_of == b.class_of);
        }
    }
}

TEST_CASE("generator order does not change class counts") {
    const auto g = general_linear(5, 2);
    std::vector<Key> gens(g.generators().begin(), g.generators().end());
    std::reverse(gens.begin(), gens.end());
    const auto h = generate(gens, g.oracle());
    CHECK(h.order() == g.order());
    CHECK(conjugacy_classes(h).classes.size() == conjugacy_classes(g).classes.size());
}

TEST_CASE("element orders") {
    const auto sl = special_linear2(5);
    CHECK(element_order(sl.identity(), sl.oracle()) == 1);
    const Key minus_i = matrix_key({4, 0, 0, 4}, 5);
    CHECK(sl.contains(minus_i));
    CHECK(element_order(minus_i, sl.oracle()) == 2);
    const auto nf = nearfield_group({3, 1, 2});
    CHECK(element_order(semilinear_key({1, 1}, 2), nf.oracle()) == 4);
}

TEST_CASE("class reports") {
    auto r = class_report(frobenius_metacyclic(5, 4), 5);
    CHECK(r.class_count == 5);
    CHECK(r.k_p == 2);
    CHECK(r.k_p_prime == 4);
    r = class_report(frobenius_metacyclic(7, 3), 7);
    CHECK(r.class_count == 5);
    CHECK(r.k_p == 3);
    CHECK(r.k_p_prime == 3);
    CHECK(std::accumulate(r.class_sizes.begin(), r.class_sizes.end(), std::uint64_t{0}) == r.order);
    CHECK(r.class_sizes.front() == 1);
    CHECK(r.representatives.front() == frobenius_metacyclic(7, 3).identity());

    // C_12: orders 1,2,3,4,6,12; p = 2 gives 2-elements {1,2,4}, 2'-elements {1,3}.
    const Key one = 1;
    const auto c12 = generate(std::span<const Key>(&one, 1), cyclic_oracle(12));
    r = class_report(c12, 2);
    CHECK(r.k_p == 4);
    CHECK(r.k_p_prime == 3);
    CHECK(r.mixed == 6);
    CHECK(r.k_p + r.k_p_prime == r.class_count + 1 - r.mixed);
}

TEST_CASE("Frobenius groups satisfy k_p + k_p' = k + 1") {
    for (std::uint64_t p : {5, 7, 11, 13}) {
        for (std::uint64_t t : divisors(p - 1)) {
            const auto r = class_report(frobenius_metacyclic(p, t), p);
            CHECK(r.mixed == 0);
            CHECK(r.k_p + r.k_p_prime == r.class_count + 1);
        }
    }
}

TEST_CASE("order statistics") {
    const auto g = special_linear2(3);
    const auto stats = order_statistics(g, conjugacy_classes(g));
    using P = std::pair<std::uint64_t, std::uint64_t>;
    CHECK(stats == std::vector<P>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
}
