#include "mcl/context.hpp"

#include <algorithm>
#include <unordered_set>

namespace mcl {

FormalContext::FormalContext(std::vector<std::string> objectNames,
                             std::vector<std::string> attributeNames,
                             std::vector<AttributeSet> rows)
    : objectNames_(std::move(objectNames)),
      attributeNames_(std::move(attributeNames)),
      rows_(std::move(rows)) {
    if (attributeNames_.size() > kMaxAttributes)
        throw CapacityError("context has " + std::to_string(attributeNames_.size()) +
                            " attributes; at most " + std::to_string(kMaxAttributes) +
                            " are supported");
    if (objectNames_.size() != rows_.size())
        throw InputError("object name count does not match row count");

    std::unordered_set<std::string> seen;
    for (const auto& name : objectNames_)
        if (name.empty() || !seen.insert(name).second)
            throw InputError("object names must be unique and non-empty: \"" + name + "\"");
    seen.clear();
    for (const auto& name : attributeNames_)
        if (name.empty() || !seen.insert(name).second)
            throw InputError("attribute names must be unique and non-empty: \"" + name + "\"");

    AttributeSet m = allAttributes();
    for (auto& r : rows_)
        if (!r.subsetOf(m)) throw InputError("row references an attribute outside the universe");
}

ObjectSet FormalContext::allObjects() const {
    ObjectSet all(static_cast<std::size_t>(objectCount()));
    all.set();
    return all;
}

int FormalContext::objectIndex(const std::string& name) const {
    auto it = std::find(objectNames_.begin(), objectNames_.end(), name);
    if (it == objectNames_.end()) throw InputError("unknown object \"" + name + "\"");
    return static_cast<int>(it - objectNames_.begin());
}

int FormalContext::attributeIndex(const std::string& name) const {
    auto it = std::find(attributeNames_.begin(), attributeNames_.end(), name);
    if (it == attributeNames_.end()) throw InputError("unknown attribute \"" + name + "\"");
    return static_cast<int>(it - attributeNames_.begin());
}

ObjectSet FormalContext::objectSet(const std::vector<std::string>& names) const {
    ObjectSet set(static_cast<std::size_t>(objectCount()));
    for (const auto& name : names) set.set(static_cast<std::size_t>(objectIndex(name)));
    return set;
}

AttributeSet FormalContext::attributeSet(const std::vector<std::string>& names) const {
    AttributeSet set;
    for (const auto& name : names) set.add(attributeIndex(name));
    return set;
}

MixedAttributeSet FormalContext::mixedSet(const std::vector<std::string>& members) const {
    MixedAttributeSet set;
    for (const auto& member : members) {
        if (!member.empty() && member.front() == '~')
            set.add({attributeIndex(member.substr(1)), true});
        else
            set.add({attributeIndex(member), false});
    }
    return set;
}

AttributeSet FormalContext::intent(const ObjectSet& a) const {
    AttributeSet shared = allAttributes();
    for (std::size_t g = a.find_first(); g != ObjectSet::npos; g = a.find_next(g))
        shared = shared & rows_[g];
    return shared;
}

ObjectSet FormalContext::extent(AttributeSet b) const {
    ObjectSet out(static_cast<std::size_t>(objectCount()));
    for (std::size_t g = 0; g < rows_.size(); ++g)
        if (b.subsetOf(rows_[g])) out.set(g);
    return out;
}

MixedAttributeSet FormalContext::mixedIntent(const ObjectSet& a) const {
    AttributeSet present = allAttributes();  // shared by all of a
    AttributeSet absent = allAttributes();   // missing from all of a
    for (std::size_t g = a.find_first(); g != ObjectSet::npos; g = a.find_next(g)) {
        present = present & rows_[g];
        absent = absent - rows_[g];
    }
    return {present, absent};
}

ObjectSet FormalContext::mixedExtent(const MixedAttributeSet& b) const {
    ObjectSet out(static_cast<std::size_t>(objectCount()));
    for (std::size_t g = 0; g < rows_.size(); ++g)
        if (b.pos.subsetOf(rows_[g]) && (b.neg & rows_[g]).empty()) out.set(g);
    return out;
}

MixedAttributeSet FormalContext::mixedClosure(const MixedAttributeSet& b) const {
    return mixedIntent(mixedExtent(b));
}

FormalContext FormalContext::restrictObjects(const std::vector<int>& keep) const {
    std::vector<std::string> names;
    std::vector<AttributeSet> rows;
    names.reserve(keep.size());
    rows.reserve(keep.size());
    for (int g : keep) {
        if (g < 0 || g >= objectCount()) throw InputError("object index out of range");
        names.push_back(objectNames_[static_cast<std::size_t>(g)]);
        rows.push_back(rows_[static_cast<std::size_t>(g)]);
    }
    return FormalContext(std::move(names), attributeNames_, std::move(rows));
}

std::string toText(const std::vector<std::string>& names, AttributeSet set) {
    std::string out;
    for (int i : set.indices()) {
        if (!out.empty()) out += ", ";
        out += names[static_cast<std::size_t>(i)];
    }
    return out;
}

std::string toText(const std::vector<std::string>& names, const MixedAttributeSet& set) {
    std::string out;
    for (MixedAttribute a : set.members()) {
        if (!out.empty()) out += ", ";
        if (a.negated) out += '~';
        out += names[static_cast<std::size_t>(a.attribute)];
    }
    return out;
}

std::vector<std::string> toNames(const std::vector<std::string>& names,
                                 const MixedAttributeSet& set) {
    std::vector<std::string> out;
    for (MixedAttribute a : set.members()) {
        std::string s = a.negated ? "~" : "";
        s += names[static_cast<std::size_t>(a.attribute)];
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace mcl
