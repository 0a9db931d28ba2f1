#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mcl/errors.hpp"

namespace mcl {

// Object sets are dynamic: contexts may hold many objects.
using ObjectSet = boost::dynamic_bitset<>;

// Attribute universes are capped at 64 so sets are single machine words.
inline constexpr int kMaxAttributes = 64;

inline std::uint64_t universeMask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// A subset of the attribute universe M, by index.
struct AttributeSet {
    std::uint64_t bits = 0;

    static AttributeSet universe(int n) { return {universeMask(n)}; }

    bool contains(int i) const { return (bits >> i) & 1u; }
    void add(int i) { bits |= std::uint64_t{1} << i; }
    void remove(int i) { bits &= ~(std::uint64_t{1} << i); }

    bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }
    bool subsetOf(AttributeSet other) const { return (bits & ~other.bits) == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend AttributeSet operator|(AttributeSet a, AttributeSet b) { return {a.bits | b.bits}; }
    friend AttributeSet operator&(AttributeSet a, AttributeSet b) { return {a.bits & b.bits}; }
    friend AttributeSet operator-(AttributeSet a, AttributeSet b) { return {a.bits & ~b.bits}; }
    friend bool operator==(AttributeSet, AttributeSet) = default;
    friend auto operator<=>(AttributeSet, AttributeSet) = default;
};

// One attribute with a polarity: m or ~m.
struct MixedAttribute {
    int attribute = 0;
    bool negated = false;

    MixedAttribute opposite() const { return {attribute, !negated}; }

    friend bool operator==(MixedAttribute, MixedAttribute) = default;
};

// A subset of M union ~M as two parallel masks. An attribute may appear
// with both polarities; such sets are inconsistent and have no models.
struct MixedAttributeSet {
    AttributeSet pos;
    AttributeSet neg;

    static MixedAttributeSet fromPositive(AttributeSet a) { return {a, {}}; }
    // All of M union ~M over an n-attribute universe.
    static MixedAttributeSet universe(int n) {
        return {AttributeSet::universe(n), AttributeSet::universe(n)};
    }

    AttributeSet positives() const { return pos; }
    AttributeSet negatives() const { return neg; }
    AttributeSet total() const { return pos | neg; }

    bool consistent() const { return (pos & neg).empty(); }
    bool fullConsistent(int n) const {
        return consistent() && total() == AttributeSet::universe(n);
    }

    bool empty() const { return pos.empty() && neg.empty(); }
    int memberCount() const { return pos.count() + neg.count(); }

    bool contains(MixedAttribute a) const {
        return a.negated ? neg.contains(a.attribute) : pos.contains(a.attribute);
    }
    void add(MixedAttribute a) {
        if (a.negated)
            neg.add(a.attribute);
        else
            pos.add(a.attribute);
    }

    bool subsetOf(const MixedAttributeSet& other) const {
        return pos.subsetOf(other.pos) && neg.subsetOf(other.neg);
    }
    bool intersects(const MixedAttributeSet& other) const {
        return !(pos & other.pos).empty() || !(neg & other.neg).empty();
    }

    // {~a : a in this}; swaps the polarity masks.
    MixedAttributeSet opposite() const { return {neg, pos}; }

    // Members sorted by attribute index, positive before negative per attribute.
    std::vector<MixedAttribute> members() const {
        std::vector<MixedAttribute> out;
        out.reserve(static_cast<std::size_t>(memberCount()));
        AttributeSet tot = total();
        for (int i : tot.indices()) {
            if (pos.contains(i)) out.push_back({i, false});
            if (neg.contains(i)) out.push_back({i, true});
        }
        return out;
    }

    friend MixedAttributeSet operator|(const MixedAttributeSet& a, const MixedAttributeSet& b) {
        return {a.pos | b.pos, a.neg | b.neg};
    }
    friend MixedAttributeSet operator-(const MixedAttributeSet& a, const MixedAttributeSet& b) {
        return {a.pos - b.pos, a.neg - b.neg};
    }
    friend bool operator==(const MixedAttributeSet&, const MixedAttributeSet&) = default;
    friend auto operator<=>(const MixedAttributeSet&, const MixedAttributeSet&) = default;
};

}  // namespace mcl
