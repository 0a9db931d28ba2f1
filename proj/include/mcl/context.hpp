#pragma once

#include <string>
#include <vector>

#include "mcl/attribute_set.hpp"

namespace mcl {

// A formal context: objects, attributes, and a boolean incidence matrix.
// Immutable after construction; every operator below is a pure function,
// safe to call concurrently.
//
// Attribute order is declaration order and is canonical everywhere:
// subset enumeration, tie-breaking, and textual rendering all follow it.
class FormalContext {
public:
    FormalContext() = default;
    FormalContext(std::vector<std::string> objectNames,
                  std::vector<std::string> attributeNames,
                  std::vector<AttributeSet> rows);

    int objectCount() const { return static_cast<int>(rows_.size()); }
    int attributeCount() const { return static_cast<int>(attributeNames_.size()); }

    const std::vector<std::string>& objectNames() const { return objectNames_; }
    const std::vector<std::string>& attributeNames() const { return attributeNames_; }

    // Row of the incidence matrix as an attribute mask.
    AttributeSet row(int object) const { return rows_[static_cast<std::size_t>(object)]; }
    bool incident(int object, int attribute) const {
        return rows_[static_cast<std::size_t>(object)].contains(attribute);
    }

    ObjectSet allObjects() const;
    AttributeSet allAttributes() const { return AttributeSet::universe(attributeCount()); }

    // Name lookups; throw InputError on unknown names.
    int objectIndex(const std::string& name) const;
    int attributeIndex(const std::string& name) const;
    ObjectSet objectSet(const std::vector<std::string>& names) const;
    AttributeSet attributeSet(const std::vector<std::string>& names) const;
    // Parses "name" / "~name" members into a mixed set.
    MixedAttributeSet mixedSet(const std::vector<std::string>& members) const;

    // Classic derivation: attributes shared by every object in a,
    // and objects having every attribute in b.
    AttributeSet intent(const ObjectSet& a) const;
    ObjectSet extent(AttributeSet b) const;

    // Signed derivation: shared attributes plus negations of attributes
    // absent from every object in a. For the empty object set this is all
    // of M union ~M.
    MixedAttributeSet mixedIntent(const ObjectSet& a) const;
    // Objects having every positive member of b and lacking every negated
    // member. Inconsistent b has an empty extent.
    ObjectSet mixedExtent(const MixedAttributeSet& b) const;
    // mixedIntent(mixedExtent(b)); a closure operator. Sets with empty
    // extent close to M union ~M.
    MixedAttributeSet mixedClosure(const MixedAttributeSet& b) const;

    // Same attributes, objects restricted to `keep` (indices into this context).
    FormalContext restrictObjects(const std::vector<int>& keep) const;

    friend bool operator==(const FormalContext&, const FormalContext&) = default;

private:
    std::vector<std::string> objectNames_;
    std::vector<std::string> attributeNames_;
    std::vector<AttributeSet> rows_;
};

// Textual rendering with the context's attribute names. Members are sorted
// by attribute index; negated attributes render as "~name".
std::string toText(const std::vector<std::string>& names, AttributeSet set);
std::string toText(const std::vector<std::string>& names, const MixedAttributeSet& set);
std::vector<std::string> toNames(const std::vector<std::string>& names,
                                 const MixedAttributeSet& set);

}  // namespace mcl
