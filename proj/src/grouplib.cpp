#include "frobkit/grouplib.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "frobkit/errors.hpp"
#include "frobkit/numtheory.hpp"
#include "frobkit/parallel.hpp"

namespace frobkit {

namespace {

// Membership tables are only worth their memory when keys are fairly dense.
constexpr Key kBitmapKeyLimit = Key{1} << 30;
constexpr Key kIndexTableKeyLimit = Key{1} << 26;

constexpr std::uint32_t kUnowned = std::numeric_limits<std::uint32_t>::max();

class SeenSet {
public:
    explicit SeenSet(Key key_bound) {
        if (key_bound > 0 && key_bound <= kBitmapKeyLimit) bits_.assign(key_bound, false);
    }

    // Returns true if k was newly inserted.
    bool insert(Key k) {
        if (!bits_.empty()) {
            if (k >= bits_.size()) throw PreconditionViolated("group element key exceeds key_bound");
            if (bits_[k]) return false;
            bits_[k] = true;
            return true;
        }
        return hashed_.insert(k).second;
    }

private:
    std::vector<bool> bits_;
    std::unordered_set<Key> hashed_;
};

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

FiniteGroup::FiniteGroup(GroupOracle oracle, std::vector<Key> generators, std::vector<Key> sorted_elements)
    : oracle_(std::move(oracle)), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {
    dense_ = !elements_.empty() && elements_.front() == 0 && elements_.back() == elements_.size() - 1;
    if (!dense_ && oracle_.key_bound > 0 && oracle_.key_bound <= kIndexTableKeyLimit) {
        index_table_.assign(oracle_.key_bound, kUnowned);
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            index_table_[elements_[i]] = static_cast<std::uint32_t>(i);
        }
    }
}

std::optional<std::size_t> FiniteGroup::index_of(Key k) const {
    if (dense_) {
        if (k < elements_.size()) return static_cast<std::size_t>(k);
        return std::nullopt;
    }
    if (!index_table_.empty()) {
        if (k >= index_table_.size() || index_table_[k] == kUnowned) return std::nullopt;
        return index_table_[k];
    }
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), k);
    if (it == elements_.end() || *it != k) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

FiniteGroup generate(std::span<const Key> generators, const GroupOracle& oracle, std::size_t cap) {
    if (cap == 0) throw PreconditionViolated("generate: cap must be at least 1");
    SeenSet seen(oracle.key_bound);
    std::vector<Key> elements{oracle.identity};
    seen.insert(oracle.identity);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        const Key x = elements[head];
        for (Key g : generators) {
            const Key y = oracle.multiply(x, g);
            if (!seen.insert(y)) continue;
            if (elements.size() >= cap) {
                throw CapExceeded("generate: closure exceeds cap of " + std::to_string(cap) + " elements");
            }
            elements.push_back(y);
        }
    }
    std::sort(elements.begin(), elements.end());
    return FiniteGroup(oracle, std::vector<Key>(generators.begin(), generators.end()), std::move(elements));
}

ClassPartition conjugacy_classes(const FiniteGroup& group, unsigned workers) {
    const std::size_t n = group.order();
    const auto elements = group.elements();
    std::vector<Key> gens;
    std::vector<Key> gens_inv;
    for (Key g : group.generators()) {
        if (g == group.identity()) continue;
        gens.push_back(g);
        gens_inv.push_back(group.invert(g));
    }

    // owner[i] is the seed index whose orbit first reached element i. Seeds
    // racing on one class are merged afterwards, so the partition does not
    // depend on scheduling.
    std::vector<std::atomic<std::uint32_t>> owner(n);
    for (auto& o : owner) o.store(kUnowned, std::memory_order_relaxed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> collisions;
    std::mutex collisions_mutex;

    parallel_for(n, workers, [&](std::size_t seed_index) {
        const auto seed = static_cast<std::uint32_t>(seed_index);
        std::uint32_t expected = kUnowned;
        if (owner[seed].load(std::memory_order_relaxed) != kUnowned) return;
        if (!owner[seed].compare_exchange_strong(expected, seed)) return;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> local;
        std::vector<std::uint32_t> stack{seed};
        while (!stack.empty()) {
            const Key x = elements[stack.back()];
            stack.pop_back();
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const Key y = group.multiply(group.multiply(gens_inv[g], x), gens[g]);
                const auto j = static_cast<std::uint32_t>(*group.index_of(y));
                std::uint32_t prev = kUnowned;
                if (owner[j].compare_exchange_strong(prev, seed)) {
                    stack.push_back(j);
                } else if (prev != seed) {
                    local.emplace_back(seed, prev);
                }
            }
        }
        if (!local.empty()) {
            std::lock_guard lock(collisions_mutex);
            collisions.insert(collisions.end(), local.begin(), local.end());
        }
    });

    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    for (auto [a, b] : collisions) {
        const auto ra = find_root(parent, a);
        const auto rb = find_root(parent, b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

    // Element indices follow key order, so the least index in each class is
    // its key-minimal representative; scanning in order visits classes
    // sorted by representative.
    ClassPartition out;
    out.class_of.assign(n, kUnowned);
    std::vector<std::uint32_t> label(n, kUnowned);
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find_root(parent, owner[i].load(std::memory_order_relaxed));
        if (label[root] == kUnowned) {
            label[root] = static_cast<std::uint32_t>(out.classes.size());
            out.classes.push_back({elements[i], 0});
        }
        out.class_of[i] = label[root];
        ++out.classes[label[root]].size;
    }
    return out;
}

std::uint64_t element_order(Key g, const GroupOracle& oracle) {
    std::uint64_t order = 1;
    Key x = g;
    while (x != oracle.identity) {
        x = oracle.multiply(x, g);
        ++order;
    }
    return order;
}

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace

ConjugacyReport class_report(const FiniteGroup& group, const ClassPartition& classes, std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionViolated("class_report: p must be prime");
    ConjugacyReport r;
    r.order = group.order();
    r.prime = p;
    r.class_count = classes.classes.size();
    for (const auto& c : classes.classes) {
        const auto ord = element_order(c.representative, group.oracle());
        r.representatives.push_back(c.representative);
        r.class_sizes.push_back(c.size);
        r.representative_orders.push_back(ord);
        const bool p_element = is_p_power(ord, p);
        const bool p_regular = ord % p != 0;
        if (p_element) ++r.k_p;
        if (p_regular) ++r.k_p_prime;
        if (!p_element && !p_regular) ++r.mixed;
    }
    return r;
}

ConjugacyReport class_report(const FiniteGroup& group, std::uint64_t p, unsigned workers) {
    return class_report(group, conjugacy_classes(group, workers), p);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_statistics(const FiniteGroup& group,
                                                                      const ClassPartition& classes) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const auto& c : classes.classes) counts[element_order(c.representative, group.oracle())] += c.size;
    return {counts.begin(), counts.end()};
}

} // namespace frobkit
