#pragma once

// Test-only generators and brute-force references. The brute-force helpers
// here use nothing but the group law, like the library oracles, so that
// frozen expected values do not come from the code under test.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symgrowth/group.hpp"
#include "symgrowth/gset.hpp"

namespace testing_support {

using namespace symgrowth;

inline GSet cyc_set(const GroupPtr& g, std::initializer_list<std::uint64_t> codes) {
    std::vector<Element> v;
    for (auto c : codes) v.push_back(Element{c});
    return GSet(g, v);
}

inline GSet range_set(const GroupPtr& g, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Element> v;
    for (auto c = lo; c <= hi; ++c) v.push_back(Element{c % g->order()});
    return GSet(g, v);
}

inline std::vector<std::uint64_t> codes(const GSet& s) {
    std::vector<std::uint64_t> out;
    for (const auto e : s) out.push_back(e.code);
    return out;
}

inline GSet random_subset(const GroupPtr& g, std::mt19937_64& rng, std::size_t max_size,
                          std::size_t min_size = 1) {
    const auto cap = static_cast<std::size_t>(std::min<std::uint64_t>(max_size, g->order()));
    std::uniform_int_distribution<std::size_t> size_dist(std::min(min_size, cap), cap);
    std::uniform_int_distribution<std::uint64_t> elem(0, g->order() - 1);
    const auto n = size_dist(rng);
    std::vector<Element> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Element{elem(rng)});
    return GSet(g, v);
}

/// A random non-empty subset of `a`.
inline GSet random_sub_of(const GSet& a, std::mt19937_64& rng) {
    std::vector<Element> v;
    std::bernoulli_distribution keep(0.6);
    for (const auto x : a)
        if (keep(rng)) v.push_back(x);
    if (v.empty()) v.push_back(a[0]);
    return GSet(a.group_ptr(), v);
}

/// Small backends covering every kind, used by the randomized suites.
inline std::vector<GroupPtr> backend_zoo() {
    return {make_cyclic(30),
            make_dihedral(7),
            make_symmetric(4),
            make_heisenberg(3),
            make_direct_product({make_cyclic(3), make_dihedral(3)}),
            make_table(cayley_table(*make_symmetric(3)), 0)};
}

inline std::set<Element> brute_product(const Group& g, const GSet& a, const GSet& b) {
    std::set<Element> out;
    for (const auto x : a)
        for (const auto y : b) out.insert(g.multiply(x, y));
    return out;
}

inline std::uint64_t brute_overlap(const Group& g, const GSet& a, Element x) {
    // |A cap xA| by testing every pair (a, b) with x b = a
    std::uint64_t n = 0;
    for (const auto p : a)
        for (const auto q : a) n += g.multiply(x, q) == p ? 1 : 0;
    return n;
}

}  // namespace testing_support
