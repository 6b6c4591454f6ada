#include "symgrowth/set_arith.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "symgrowth/budget.hpp"
#include "symgrowth/error.hpp"

namespace symgrowth {

namespace {

// Counts hits per element. Uses a flat array indexed by encoding when the
// group is small relative to the work, a hash map otherwise.
class Accumulator {
public:
    Accumulator(const Group& g, std::uint64_t expected_pairs)
        : dense_(g.order() <= std::max<std::uint64_t>(1ULL << 16U, 4 * expected_pairs) &&
                 g.order() <= (1ULL << 26U)) {
        if (dense_) {
            counts_.assign(g.order(), 0);
        } else {
            sparse_.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(expected_pairs, 1ULL << 22U)));
        }
    }

    void add(Element x) {
        if (dense_) {
            if (counts_[x.code]++ == 0) touched_.push_back(x);
        } else {
            ++sparse_[x.code];
        }
    }

    std::vector<Element> support() {
        std::vector<Element> out;
        if (dense_) {
            out = touched_;
        } else {
            out.reserve(sparse_.size());
            for (const auto& [code, count] : sparse_) out.push_back(Element{code});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::uint64_t count(Element x) const {
        if (dense_) return counts_[x.code];
        const auto it = sparse_.find(x.code);
        return it == sparse_.end() ? 0 : it->second;
    }

private:
    bool dense_;
    std::vector<std::uint64_t> counts_;
    std::vector<Element> touched_;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

}  // namespace

std::uint64_t ConvTable::at(Element x) const {
    const auto elems = support.elements();
    const auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x) return 0;
    return values[static_cast<std::size_t>(it - elems.begin())];
}

std::uint64_t ConvTable::total() const { return std::accumulate(values.begin(), values.end(), std::uint64_t{0}); }

GSet product(const GSet& a, const GSet& b) {
    require_same_group(a, b);
    if (a.empty() || b.empty()) return GSet(a.group_ptr());
    const auto pairs = saturating_mul(a.size(), b.size());
    charge_pairs(pairs, "product");
    const auto& g = a.group();
    Accumulator acc(g, pairs);
    for (const auto x : a)
        for (const auto y : b) acc.add(g.multiply(x, y));
    return GSet::from_sorted_unique(a.group_ptr(), acc.support());
}

GSet inverse_set(const GSet& a) {
    const auto& g = a.group();
    std::vector<Element> out;
    out.reserve(a.size());
    for (const auto x : a) out.push_back(g.inverse(x));
    std::sort(out.begin(), out.end());
    return GSet::from_sorted_unique(a.group_ptr(), std::move(out));
}

GSet power(const GSet& a, unsigned k) {
    GSet result = GSet::singleton(a.group_ptr(), a.group().identity());
    if (k == 0) return result;
    result = a;
    for (unsigned i = 1; i < k; ++i) result = product(result, a);
    return result;
}

std::uint64_t conv_value(const GSet& a, const GSet& b, Element x) {
    require_same_group(a, b);
    const auto& g = a.group();
    g.check(x);
    std::uint64_t count = 0;
    if (a.size() <= b.size()) {
        // a in A with a^-1 x in B
        for (const auto y : a) count += b.contains(g.multiply(g.inverse(y), x)) ? 1 : 0;
    } else {
        // b in B with x b^-1 in A
        for (const auto y : b) count += a.contains(g.multiply(x, g.inverse(y))) ? 1 : 0;
    }
    return count;
}

ConvTable conv_table(const GSet& a, const GSet& b) {
    require_same_group(a, b);
    if (a.empty() || b.empty()) return ConvTable{GSet(a.group_ptr()), {}};
    const auto pairs = saturating_mul(a.size(), b.size());
    charge_pairs(pairs, "conv_table");
    const auto& g = a.group();
    Accumulator acc(g, pairs);
    for (const auto x : a)
        for (const auto y : b) acc.add(g.multiply(x, y));
    auto support = acc.support();
    std::vector<std::uint64_t> values;
    values.reserve(support.size());
    for (const auto x : support) values.push_back(acc.count(x));
    return ConvTable{GSet::from_sorted_unique(a.group_ptr(), std::move(support)), std::move(values)};
}

std::uint64_t pair_energy(const GSet& b, const GSet& c, const GSet& d, const GSet& e) {
    require_same_group(b, c);
    require_same_group(b, d);
    require_same_group(b, e);
    const auto left = conv_table(b, c);
    const auto right = conv_table(d, e);
    std::uint64_t energy = 0;
    for (std::size_t i = 0; i < left.values.size(); ++i) energy += left.values[i] * right.at(left.support[i]);
    return energy;
}

std::uint64_t self_energy(const GSet& a, const GSet& b) {
    const auto table = conv_table(a, b);
    std::uint64_t energy = 0;
    for (const auto v : table.values) energy += v * v;
    return energy;
}

DoublingStats doubling_stats(const GSet& a) {
    if (a.empty()) throw EmptySet("doubling_stats requires a non-empty set");
    const auto square = product(a, a);
    const auto inv = inverse_set(a);
    const auto difference = product(a, inv);
    const auto double_difference = product(square, inverse_set(square));
    DoublingStats stats;
    stats.size = a.size();
    stats.square_size = square.size();
    stats.difference_size = difference.size();
    stats.double_difference_size = double_difference.size();
    stats.doubling = Rational(Integer(stats.square_size), Integer(stats.size));
    return stats;
}

}  // namespace symgrowth
