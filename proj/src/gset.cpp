#include "symgrowth/gset.hpp"

#include <algorithm>
#include <iterator>

#include "symgrowth/error.hpp"

namespace symgrowth {

namespace {

constexpr std::uint64_t kDenseIndexLimit = 1ULL << 20U;

}  // namespace

std::shared_ptr<const GSet::Data> GSet::index(const Group& group, std::vector<Element> sorted_unique) {
    auto data = std::make_shared<Data>();
    data->elements = std::move(sorted_unique);
    if (group.order() <= kDenseIndexLimit) {
        data->dense = true;
        data->bitmap.assign((group.order() + 63) / 64, 0);
        for (const auto e : data->elements) data->bitmap[e.code >> 6U] |= 1ULL << (e.code & 63U);
    } else {
        data->hashed.reserve(data->elements.size());
        for (const auto e : data->elements) data->hashed.insert(e.code);
    }
    return data;
}

GSet::GSet(GroupPtr group) : GSet(std::move(group), std::vector<Element>{}) {}

GSet::GSet(GroupPtr group, std::vector<Element> elements) : group_(std::move(group)) {
    if (!group_) throw InvalidArgument("GSet needs a group");
    for (const auto e : elements) group_->check(e);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    data_ = index(*group_, std::move(elements));
}

GSet GSet::from_sorted_unique(GroupPtr group, std::vector<Element> sorted_unique) {
    auto data = index(*group, std::move(sorted_unique));
    return GSet(std::move(group), std::move(data));
}

bool GSet::contains(Element x) const noexcept {
    if (!group_->is_valid(x)) return false;
    if (data_->dense) return (data_->bitmap[x.code >> 6U] >> (x.code & 63U)) & 1U;
    return data_->hashed.contains(x.code);
}

bool operator==(const GSet& a, const GSet& b) {
    return a.group().same_as(b.group()) && a.data_->elements == b.data_->elements;
}

json GSet::to_json() const {
    json out = json::array();
    for (const auto e : data_->elements) out.push_back(group_->element_to_json(e));
    return out;
}

GSet GSet::from_json(GroupPtr group, const json& value) {
    if (!value.is_array()) throw ParseError("set must be a JSON array of elements");
    std::vector<Element> elements;
    elements.reserve(value.size());
    for (const auto& v : value) elements.push_back(group->element_from_json(v));
    return GSet(std::move(group), std::move(elements));
}

void require_same_group(const GSet& a, const GSet& b) {
    if (!a.group().same_as(b.group())) throw ContextMismatch("sets belong to different groups");
}

bool is_subset(const GSet& sub, const GSet& super) {
    require_same_group(sub, super);
    if (sub.size() > super.size()) return false;
    return std::all_of(sub.begin(), sub.end(), [&](Element x) { return super.contains(x); });
}

GSet set_intersection(const GSet& a, const GSet& b) {
    require_same_group(a, b);
    std::vector<Element> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return GSet::from_sorted_unique(a.group_ptr(), std::move(out));
}

GSet set_union(const GSet& a, const GSet& b) {
    require_same_group(a, b);
    std::vector<Element> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return GSet::from_sorted_unique(a.group_ptr(), std::move(out));
}

GSet set_difference(const GSet& a, const GSet& b) {
    require_same_group(a, b);
    std::vector<Element> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return GSet::from_sorted_unique(a.group_ptr(), std::move(out));
}

GSet left_translate(Element t, const GSet& a) {
    const auto& g = a.group();
    g.check(t);
    std::vector<Element> out;
    out.reserve(a.size());
    for (const auto x : a) out.push_back(g.multiply(t, x));
    return GSet(a.group_ptr(), std::move(out));
}

}  // namespace symgrowth
