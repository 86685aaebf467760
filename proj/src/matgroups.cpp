#include "frobkit/matgroups.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <tuple>

#include "frobkit/errors.hpp"
#include "frobkit/numtheory.hpp"
#include "frobkit/parallel.hpp"

namespace frobkit {

namespace {

using Mat = std::array<std::uint64_t, kMaxMatrixDim * kMaxMatrixDim>;

void check_dim(unsigned dim) {
    if (dim < 1 || dim > kMaxMatrixDim) {
        throw PreconditionViolated("matrix dimension must be between 1 and " + std::to_string(kMaxMatrixDim));
    }
}

Key pow_key(std::uint64_t p, unsigned e) { return to_u64(ipow(p, e)); }

Mat decode(Key key, std::uint64_t p, unsigned dim) {
    Mat m{};
    const unsigned s = dim * dim;
    for (unsigned i = s; i-- > 0;) {
        m[i] = key % p;
        key /= p;
    }
    return m;
}

Key encode(const Mat& m, std::uint64_t p, unsigned dim) {
    Key key = 0;
    for (unsigned i = 0; i < dim * dim; ++i) key = key * p + m[i];
    return key;
}

Mat mat_mul(const Mat& a, const Mat& b, std::uint64_t p, unsigned dim) {
    Mat r{};
    for (unsigned i = 0; i < dim; ++i) {
        for (unsigned j = 0; j < dim; ++j) {
            std::uint64_t s = 0;
            for (unsigned k = 0; k < dim; ++k) s += a[i * dim + k] * b[k * dim + j];
            r[i * dim + j] = s % p;
        }
    }
    return r;
}

std::uint64_t mat_det(Mat m, std::uint64_t p, unsigned dim) {
    std::uint64_t det = 1;
    for (unsigned c = 0; c < dim; ++c) {
        unsigned pivot = c;
        while (pivot < dim && m[pivot * dim + c] == 0) ++pivot;
        if (pivot == dim) return 0;
        if (pivot != c) {
            for (unsigned j = 0; j < dim; ++j) std::swap(m[c * dim + j], m[pivot * dim + j]);
            det = (p - det) % p;
        }
        det = mulmod(det, m[c * dim + c], p);
        const std::uint64_t inv = powmod(m[c * dim + c], p - 2, p);
        for (unsigned r = c + 1; r < dim; ++r) {
            const std::uint64_t f = mulmod(m[r * dim + c], inv, p);
            for (unsigned j = c; j < dim; ++j) {
                m[r * dim + j] = (m[r * dim + j] + p - mulmod(f, m[c * dim + j], p)) % p;
            }
        }
    }
    return det;
}

Mat mat_inv(const Mat& m, std::uint64_t p, unsigned dim) {
    Mat a = m;
    Mat inv{};
    for (unsigned i = 0; i < dim; ++i) inv[i * dim + i] = 1;
    for (unsigned c = 0; c < dim; ++c) {
        unsigned pivot = c;
        while (pivot < dim && a[pivot * dim + c] == 0) ++pivot;
        if (pivot == dim) throw PreconditionViolated("matrix is singular");
        for (unsigned j = 0; j < dim; ++j) {
            std::swap(a[c * dim + j], a[pivot * dim + j]);
            std::swap(inv[c * dim + j], inv[pivot * dim + j]);
        }
        const std::uint64_t s = powmod(a[c * dim + c], p - 2, p);
        for (unsigned j = 0; j < dim; ++j) {
            a[c * dim + j] = mulmod(a[c * dim + j], s, p);
            inv[c * dim + j] = mulmod(inv[c * dim + j], s, p);
        }
        for (unsigned r = 0; r < dim; ++r) {
            if (r == c || a[r * dim + c] == 0) continue;
            const std::uint64_t f = a[r * dim + c];
            for (unsigned j = 0; j < dim; ++j) {
                a[r * dim + j] = (a[r * dim + j] + p - mulmod(f, a[c * dim + j], p)) % p;
                inv[r * dim + j] = (inv[r * dim + j] + p - mulmod(f, inv[c * dim + j], p)) % p;
            }
        }
    }
    return inv;
}

Entries vec_decode(Key key, std::uint64_t p, unsigned dim) {
    Entries v(dim);
    for (unsigned i = dim; i-- > 0;) {
        v[i] = key % p;
        key /= p;
    }
    return v;
}

Key vec_encode(const Entries& v, std::uint64_t p) {
    Key key = 0;
    for (auto x : v) key = key * p + x;
    return key;
}

Entries mat_apply(const Mat& m, const Entries& x, std::uint64_t p, unsigned dim) {
    Entries r(dim, 0);
    for (unsigned i = 0; i < dim; ++i) {
        std::uint64_t s = 0;
        for (unsigned k = 0; k < dim; ++k) s += m[i * dim + k] * x[k];
        r[i] = s % p;
    }
    return r;
}

// 2x2 fast path used by the regular-subgroup search.
struct M2 {
    std::uint64_t a, b, c, d;
};

inline M2 m2_decode(Key k, std::uint64_t p) {
    M2 m;
    m.d = k % p;
    k /= p;
    m.c = k % p;
    k /= p;
    m.b = k % p;
    m.a = k / p;
    return m;
}

inline Key m2_encode(const M2& m, std::uint64_t p) { return ((m.a * p + m.b) * p + m.c) * p + m.d; }

inline M2 m2_mul(const M2& x, const M2& y, std::uint64_t p) {
    return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p, (x.c * y.a + x.d * y.c) % p,
            (x.c * y.b + x.d * y.d) % p};
}

inline bool m2_fixed_point_free(const M2& m, std::uint64_t p) {
    const std::uint64_t am1 = (m.a + p - 1) % p;
    const std::uint64_t dm1 = (m.d + p - 1) % p;
    return (am1 * dm1 + p * p - m.b * m.c % p) % p != 0;
}

} // namespace

Key matrix_key(const Entries& row_major, std::uint64_t p) {
    Key key = 0;
    for (auto x : row_major) {
        if (x >= p) throw PreconditionViolated("matrix entry out of range");
        key = key * p + x;
    }
    return key;
}

Entries matrix_entries(Key key, std::uint64_t p, unsigned dim) {
    check_dim(dim);
    const Mat m = decode(key, p, dim);
    return Entries(m.begin(), m.begin() + dim * dim);
}

Key identity_matrix_key(std::uint64_t p, unsigned dim) {
    check_dim(dim);
    Mat m{};
    for (unsigned i = 0; i < dim; ++i) m[i * dim + i] = 1;
    return encode(m, p, dim);
}

GroupOracle matrix_oracle(std::uint64_t p, unsigned dim) {
    check_dim(dim);
    if (!is_prime(p)) throw PreconditionViolated("matrix_oracle: p must be prime");
    GroupOracle o;
    o.identity = identity_matrix_key(p, dim);
    o.key_bound = pow_key(p, dim * dim);
    if (dim == 2) {
        o.multiply = [p](Key x, Key y) { return m2_encode(m2_mul(m2_decode(x, p), m2_decode(y, p), p), p); };
    } else {
        o.multiply = [p, dim](Key x, Key y) {
            return encode(mat_mul(decode(x, p, dim), decode(y, p, dim), p, dim), p, dim);
        };
    }
    o.invert = [p, dim](Key x) { return encode(mat_inv(decode(x, p, dim), p, dim), p, dim); };
    return o;
}

Key affine_key(const Entries& translation, Key matrix, std::uint64_t p, unsigned dim) {
    return vec_encode(translation, p) * pow_key(p, dim * dim) + matrix;
}

std::pair<Entries, Key> affine_parts(Key key, std::uint64_t p, unsigned dim) {
    const Key base = pow_key(p, dim * dim);
    return {vec_decode(key / base, p, dim), key % base};
}

GroupOracle affine_oracle(std::uint64_t p, unsigned dim) {
    check_dim(dim);
    if (!is_prime(p)) throw PreconditionViolated("affine_oracle: p must be prime");
    const Key base = pow_key(p, dim * dim);
    GroupOracle o;
    o.identity = identity_matrix_key(p, dim);
    o.key_bound = to_u64(ipow(p, dim * dim + dim));
    o.multiply = [p, dim, base](Key x, Key y) {
        const Mat mx = decode(x % base, p, dim);
        const Mat my = decode(y % base, p, dim);
        Entries v = vec_decode(x / base, p, dim);
        const Entries w = mat_apply(mx, vec_decode(y / base, p, dim), p, dim);
        for (unsigned i = 0; i < dim; ++i) v[i] = (v[i] + w[i]) % p;
        return vec_encode(v, p) * base + encode(mat_mul(mx, my, p, dim), p, dim);
    };
    o.invert = [p, dim, base](Key x) {
        const Mat inv = mat_inv(decode(x % base, p, dim), p, dim);
        Entries v = mat_apply(inv, vec_decode(x / base, p, dim), p, dim);
        for (auto& c : v) c = (p - c) % p;
        return vec_encode(v, p) * base + encode(inv, p, dim);
    };
    return o;
}

Entries apply_matrix(Key matrix, const Entries& x, std::uint64_t p, unsigned dim) {
    check_dim(dim);
    return mat_apply(decode(matrix, p, dim), x, p, dim);
}

std::uint64_t determinant(Key matrix, std::uint64_t p, unsigned dim) {
    check_dim(dim);
    return mat_det(decode(matrix, p, dim), p, dim);
}

bool fixed_point_free(Key matrix, std::uint64_t p, unsigned dim) {
    check_dim(dim);
    Mat m = decode(matrix, p, dim);
    for (unsigned i = 0; i < dim; ++i) m[i * dim + i] = (m[i * dim + i] + p - 1) % p;
    return mat_det(m, p, dim) != 0;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionViolated("smallest_primitive_root: p must be prime");
    if (p == 2) return 1;
    for (std::uint64_t g = 2; g < p; ++g) {
        if (multiplicative_order(static_cast<std::int64_t>(g), p) == p - 1) return g;
    }
    throw NoSolution("smallest_primitive_root: none found");
}

FiniteGroup matrix_group(std::vector<Key> generators, std::uint64_t p, unsigned dim, std::size_t cap) {
    const auto o = matrix_oracle(p, dim);
    for (Key g : generators) {
        if (g >= o.key_bound || determinant(g, p, dim) == 0) {
            throw PreconditionViolated("matrix_group: generator is not an invertible matrix");
        }
    }
    return generate(generators, o, cap);
}

FiniteGroup general_linear(std::uint64_t p, unsigned dim, std::size_t cap) {
    const std::uint64_t w = smallest_primitive_root(p);
    if (dim == 1) return matrix_group({w % p}, p, 1, cap);
    if (dim != 2) throw PreconditionViolated("general_linear: only dimensions 1 and 2 are supported");
    if (p == 2) return special_linear2(p, cap);
    return matrix_group({matrix_key({w % p, 0, 0, 1}, p), matrix_key({p - 1, 1, p - 1, 0}, p)}, p, 2, cap);
}

FiniteGroup special_linear2(std::uint64_t p, std::size_t cap) {
    return matrix_group({matrix_key({1, 1, 0, 1}, p), matrix_key({1, 0, 1, 1}, p)}, p, 2, cap);
}

FiniteGroup frobenius_affine(std::uint64_t p, unsigned dim, const FiniteGroup& complement, std::size_t cap) {
    const auto o = affine_oracle(p, dim);
    const Key id = identity_matrix_key(p, dim);
    std::vector<Key> gens;
    for (unsigned i = 0; i < dim; ++i) {
        Entries e(dim, 0);
        e[i] = 1;
        gens.push_back(affine_key(e, id, p, dim));
    }
    for (Key g : complement.generators()) gens.push_back(g);
    const std::size_t expected = complement.order() * to_u64(ipow(p, dim));
    if (expected > cap) {
        throw CapExceeded("frobenius_affine: order " + std::to_string(expected) + " exceeds cap");
    }
    return generate(gens, o, cap);
}

FiniteGroup frobenius_metacyclic(std::uint64_t p, std::uint64_t t, std::size_t cap) {
    if (!is_prime(p)) throw PreconditionViolated("frobenius_metacyclic: p must be prime");
    if (t == 0 || (p - 1) % t != 0) {
        throw InvalidDivisor("frobenius_metacyclic: " + std::to_string(t) + " does not divide " +
                             std::to_string(p - 1));
    }
    const std::uint64_t h = powmod(smallest_primitive_root(p), (p - 1) / t, p);
    const FiniteGroup complement = matrix_group({h}, p, 1, cap);
    return frobenius_affine(p, 1, complement, cap);
}

namespace {

std::uint64_t order_m2(const M2& g, std::uint64_t p) {
    const Key id = m2_encode({1, 0, 0, 1}, p);
    std::uint64_t n = 1;
    M2 x = g;
    while (m2_encode(x, p) != id) {
        x = m2_mul(x, g, p);
        ++n;
    }
    return n;
}

struct Candidate {
    std::vector<Key> generators;
    std::vector<Key> elements; // sorted
};

// Closure of <x, y> aborted as soon as it cannot be a regular subgroup of
// order target. Returns the sorted element list on success.
class RegularClosure {
public:
    RegularClosure(std::uint64_t p) : p_(p), target_(p * p - 1), image_(p * p, kEmpty) {}

    std::optional<std::vector<Key>> run(const M2& x, const M2& y) {
        const M2 id{1, 0, 0, 1};
        elements_.clear();
        mats_.clear();
        bool ok = push(id);
        for (std::size_t head = 0; ok && head < mats_.size(); ++head) {
            const M2 g = mats_[head];
            ok = push(m2_mul(g, x, p_)) && push(m2_mul(g, y, p_));
        }
        for (Key k : elements_) image_[column(m2_decode(k, p_))] = kEmpty;
        if (!ok || elements_.size() != target_) return std::nullopt;
        std::vector<Key> out = elements_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr Key kEmpty = ~Key{0};

    std::size_t column(const M2& m) const { return m.a * p_ + m.c; }

    bool push(const M2& m) {
        const Key key = m2_encode(m, p_);
        Key& slot = image_[column(m)];
        if (slot == key) return true;
        if (slot != kEmpty) return false;
        if (!elements_.empty() && !m2_fixed_point_free(m, p_)) return false;
        if (elements_.size() == target_) return false;
        slot = key;
        elements_.push_back(key);
        mats_.push_back(m);
        return true;
    }

    std::uint64_t p_;
    std::size_t target_;
    std::vector<Key> image_;
    std::vector<Key> elements_;
    std::vector<M2> mats_;
};

} // namespace

std::optional<Key> find_conjugator(const FiniteGroup& gl, const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return std::nullopt;
    std::vector<bool> in_b(gl.order(), false);
    for (Key k : b.elements()) in_b[*gl.index_of(k)] = true;
    std::vector<Key> gens(a.generators().begin(), a.generators().end());
    for (Key g : gl.elements()) {
        const Key gi = gl.invert(g);
        bool all = true;
        for (Key s : gens) {
            const auto idx = gl.index_of(gl.multiply(gl.multiply(gi, s), g));
            if (!idx || !in_b[*idx]) {
                all = false;
                break;
            }
        }
        if (all) return g;
    }
    return std::nullopt;
}

std::vector<RegularSubgroupRecord> find_regular_subgroups(std::uint64_t p, const RegularSearchOptions& options) {
    if (!is_prime(p) || p == 2) throw PreconditionViolated("find_regular_subgroups: p must be an odd prime");
    const std::uint64_t limit = options.extended ? 59 : kRegularSearchDefaultMaxP;
    if (p > limit) {
        throw CapExceeded("find_regular_subgroups: p=" + std::to_string(p) + " exceeds the supported limit " +
                          std::to_string(limit) + (options.extended ? "" : " (use the extended option)"));
    }
    const std::size_t cap = options.extended ? std::max(options.cap, kExtendedElementCap) : options.cap;
    const FiniteGroup gl = general_linear(p, 2, cap);
    const ClassPartition classes = conjugacy_classes(gl, options.workers);
    const std::uint64_t target = p * p - 1;
    const Key id = identity_matrix_key(p, 2);

    // A class is usable when all nontrivial powers of its members act
    // fixed-point-freely; this is a class function.
    std::vector<std::uint64_t> class_order(classes.classes.size());
    std::vector<bool> usable(classes.classes.size(), false);
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        const M2 r = m2_decode(classes.classes[c].representative, p);
        class_order[c] = order_m2(r, p);
        if (target % class_order[c] != 0) continue;
        bool good = true;
        M2 x = r;
        for (std::uint64_t j = 1; j < class_order[c] && good; ++j) {
            good = m2_fixed_point_free(x, p);
            x = m2_mul(x, r, p);
        }
        usable[c] = good && classes.classes[c].representative != id;
    }

    // Seeds x: key-minimal members of each conjugacy class of non-scalar
    // cyclic subgroups, found by merging the classes of x^j, gcd(j, |x|) = 1.
    std::vector<Key> seeds;
    std::vector<bool> merged(classes.classes.size(), false);
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        if (!usable[c] || merged[c]) continue;
        const Key rep = classes.classes[c].representative;
        const M2 r = m2_decode(rep, p);
        Key best = rep;
        M2 x = r;
        for (std::uint64_t j = 1; j < class_order[c]; ++j) {
            if (gcd(j, class_order[c]) == 1) {
                const std::size_t cj = classes.class_of[*gl.index_of(m2_encode(x, p))];
                merged[cj] = true;
                best = std::min(best, classes.classes[cj].representative);
            }
            x = m2_mul(x, r, p);
        }
        if (classes.classes[c].size == 1) continue; // scalar
        seeds.push_back(best);
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::vector<Key> partners;
    for (std::size_t i = 0; i < gl.order(); ++i) {
        if (usable[classes.class_of[i]]) partners.push_back(gl.elements()[i]);
    }

    std::vector<std::vector<Candidate>> per_seed(seeds.size());
    parallel_for(seeds.size(), options.workers, [&](std::size_t s) {
        RegularClosure closure(p);
        std::vector<bool> covered(gl.order(), false);
        const M2 x = m2_decode(seeds[s], p);
        for (Key yk : partners) {
            const std::size_t yi = *gl.index_of(yk);
            if (covered[yi]) continue;
            auto elems = closure.run(x, m2_decode(yk, p));
            if (!elems) continue;
            for (Key e : *elems) covered[*gl.index_of(e)] = true;
            per_seed[s].push_back({{seeds[s], yk}, std::move(*elems)});
        }
    });

    struct Found {
        RegularSubgroupRecord record;
        FiniteGroup group;
    };
    std::vector<Found> found;
    const auto oracle = matrix_oracle(p, 2);
    for (auto& batch : per_seed) {
        for (auto& cand : batch) {
            std::vector<Key> gens = cand.generators;
            if (gens[0] == gens[1]) gens.pop_back();
            FiniteGroup e(oracle, gens, std::move(cand.elements));
            const ClassPartition ec = conjugacy_classes(e);
            RegularSubgroupRecord rec{p, gens, e.order(), ec.classes.size(), order_statistics(e, ec)};
            bool duplicate = false;
            for (const auto& f : found) {
                if (f.record.class_count != rec.class_count || f.record.order_stats != rec.order_stats) continue;
                if (find_conjugator(gl, e, f.group)) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) found.push_back({std::move(rec), std::move(e)});
        }
    }

    std::vector<RegularSubgroupRecord> out;
    for (auto& f : found) out.push_back(std::move(f.record));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.class_count, a.order_stats) < std::tie(b.class_count, b.order_stats);
    });
    return out;
}

FiniteGroup exceptional_11(unsigned workers) {
    RegularSearchOptions opts;
    opts.workers = workers;
    for (const auto& rec : find_regular_subgroups(11, opts)) {
        if (rec.class_count == 9) return frobenius_affine(11, 2, matrix_group(rec.generators, 11, 2));
    }
    throw NoSolution("exceptional_11: no regular subgroup with 9 classes in GL(2, 11)");
}

Key semilinear_matrix(const GaloisField& field, SemilinearPair s) {
    if (field.degree() != 2) throw PreconditionViolated("semilinear_matrix: field must have degree 2");
    const std::uint64_t p = field.characteristic();
    const std::uint64_t x = p; // vector code of the polynomial x
    // Column j holds the coordinates of the image of basis vector j.
    auto column_matrix = [p](std::uint64_t c0, std::uint64_t c1) {
        Mat m{};
        m[0] = c0 % p;
        m[2] = c0 / p;
        m[1] = c1 % p;
        m[3] = c1 / p;
        return m;
    };
    const std::uint64_t za = field.exp_vector(s.a);
    Mat r = column_matrix(za, field.multiply_vectors(za, x));
    const Mat frob = column_matrix(1, field.exp_vector(field.log_vector(x) * p));
    for (std::uint64_t j = 0; j < s.i; ++j) r = mat_mul(r, frob, p, 2);
    return encode(r, p, 2);
}

FiniteGroup nearfield_matrix_group(std::uint64_t p, unsigned primitive_rank) {
    const GaloisField field(p, 2, primitive_rank);
    const FiniteGroup nf = nearfield_group({p, 1, 2});
    std::vector<Key> gens;
    for (Key g : nf.generators()) gens.push_back(semilinear_matrix(field, semilinear_pair(g, 2)));
    return matrix_group(gens, p, 2);
}

std::uint64_t alternating_cycle_count(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionViolated("alternating_cycle_count: p must be prime");
    if (n < 2 * p) throw PreconditionViolated("alternating_cycle_count: need n >= 2p");
    std::uint64_t count = 0;
    for (std::uint64_t m = 1; m <= n; m += 2) {
        if (m % p != 0) ++count;
    }
    return count + 1;
}

} // namespace frobkit
