#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "symgrowth/group.hpp"

namespace symgrowth {

/// A finite subset of a group: sorted, duplicate-free, immutable. Copies
/// share storage. Membership is O(1) through a bitmap when the group is
/// small enough and a hash set otherwise.
class GSet {
public:
    explicit GSet(GroupPtr group);

    /// Validates, sorts and deduplicates.
    GSet(GroupPtr group, std::vector<Element> elements);

    /// Trusts the caller: `sorted_unique` must already be canonical.
    static GSet from_sorted_unique(GroupPtr group, std::vector<Element> sorted_unique);

    static GSet singleton(GroupPtr group, Element x) { return GSet(std::move(group), {x}); }

    const Group& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }

    std::span<const Element> elements() const noexcept { return data_->elements; }
    auto begin() const noexcept { return data_->elements.begin(); }
    auto end() const noexcept { return data_->elements.end(); }
    std::size_t size() const noexcept { return data_->elements.size(); }
    bool empty() const noexcept { return data_->elements.empty(); }
    Element operator[](std::size_t i) const { return data_->elements[i]; }

    bool contains(Element x) const noexcept;

    /// Same group and same elements.
    friend bool operator==(const GSet& a, const GSet& b);

    /// Array of backend element encodings in canonical order.
    json to_json() const;
    static GSet from_json(GroupPtr group, const json& value);

private:
    struct Data {
        std::vector<Element> elements;
        std::vector<std::uint64_t> bitmap;
        std::unordered_set<std::uint64_t> hashed;
        bool dense = false;
    };

    GSet(GroupPtr group, std::shared_ptr<const Data> data) : group_(std::move(group)), data_(std::move(data)) {}
    static std::shared_ptr<const Data> index(const Group& group, std::vector<Element> sorted_unique);

    GroupPtr group_;
    std::shared_ptr<const Data> data_;
};

/// Throws ContextMismatch unless both sets live in the same group.
void require_same_group(const GSet& a, const GSet& b);

bool is_subset(const GSet& sub, const GSet& super);
GSet set_intersection(const GSet& a, const GSet& b);
GSet set_union(const GSet& a, const GSet& b);
GSet set_difference(const GSet& a, const GSet& b);

/// tA = {ta : a in A}.
GSet left_translate(Element t, const GSet& a);

}  // namespace symgrowth
