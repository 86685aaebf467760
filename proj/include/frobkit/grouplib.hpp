#pragma once

// Generic finite-group engine. Elements of every concrete group type are
// encoded as fixed-width integer keys; a GroupOracle supplies the group law on
// keys. Representatives and output ordering are always key-minimal so that
// reports are deterministic and diffable.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace frobkit {

using Key = std::uint64_t;

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

struct GroupOracle {
    Key identity = 0;
    std::function<Key(Key, Key)> multiply;
    std::function<Key(Key)> invert;
    /// Exclusive upper bound on keys, or 0 when unknown. Enables bitmap
    /// membership during closure.
    Key key_bound = 0;
};

/// An enumerated finite group; immutable after construction.
class FiniteGroup {
public:
    FiniteGroup(GroupOracle oracle, std::vector<Key> generators, std::vector<Key> sorted_elements);

    const GroupOracle& oracle() const { return oracle_; }
    std::span<const Key> generators() const { return generators_; }
    std::span<const Key> elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    std::optional<std::size_t> index_of(Key k) const;
    bool contains(Key k) const { return index_of(k).has_value(); }

    Key multiply(Key a, Key b) const { return oracle_.multiply(a, b); }
    Key invert(Key a) const { return oracle_.invert(a); }
    Key identity() const { return oracle_.identity; }

private:
    GroupOracle oracle_;
    std::vector<Key> generators_;
    std::vector<Key> elements_;
    std::vector<std::uint32_t> index_table_;
    bool dense_ = false;
};

/// Closure of the generators under the oracle. Throws CapExceeded once the
/// closure holds more than `cap` elements.
FiniteGroup generate(std::span<const Key> generators, const GroupOracle& oracle,
                     std::size_t cap = kDefaultElementCap);

struct ConjugacyClass {
    Key representative = 0;
    std::size_t size = 0;
};

struct ClassPartition {
    /// Sorted by representative key; each representative is key-minimal in
    /// its class.
    std::vector<ConjugacyClass> classes;
    /// class_of[i] is the index into `classes` of the class holding
    /// elements()[i].
    std::vector<std::uint32_t> class_of;
};

/// Conjugacy classes by orbit closure under conjugation by the generators.
/// With workers > 1 the seeds are shared between threads; the result is
/// identical to the single-worker run.
ClassPartition conjugacy_classes(const FiniteGroup& group, unsigned workers = 1);

std::uint64_t element_order(Key g, const GroupOracle& oracle);

struct ConjugacyReport {
    std::uint64_t order = 0;
    std::uint64_t prime = 0;
    std::uint64_t class_count = 0;
    std::vector<Key> representatives;
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::uint64_t> representative_orders;
    /// Classes of p-elements, identity included.
    std::uint64_t k_p = 0;
    /// Classes of p-regular elements, identity included.
    std::uint64_t k_p_prime = 0;
    /// Classes that are neither p-elements nor p-regular.
    std::uint64_t mixed = 0;
};

ConjugacyReport class_report(const FiniteGroup& group, std::uint64_t p, unsigned workers = 1);
ConjugacyReport class_report(const FiniteGroup& group, const ClassPartition& classes, std::uint64_t p);

/// Multiset of element orders as sorted (order, count) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_statistics(const FiniteGroup& group,
                                                                      const ClassPartition& classes);

} // namespace frobkit
