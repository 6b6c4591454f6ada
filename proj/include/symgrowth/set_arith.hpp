#pragma once

#include <cstdint>
#include <vector>

#include "symgrowth/gset.hpp"
#include "symgrowth/rational.hpp"

namespace symgrowth {

/// The function x -> 1_A * 1_B(x) on its support AB. `values[i]` is the
/// count at `support[i]`.
struct ConvTable {
    GSet support;
    std::vector<std::uint64_t> values;

    /// Count at x; 0 off the support.
    std::uint64_t at(Element x) const;
    std::uint64_t total() const;
};

struct DoublingStats {
    Rational doubling;  ///< K = |A^2| / |A|
    std::uint64_t size = 0;
    std::uint64_t square_size = 0;            ///< |A^2|
    std::uint64_t difference_size = 0;        ///< |A A^-1|
    std::uint64_t double_difference_size = 0; ///< |A^2 A^-2|
};

/// AB = {ab : a in A, b in B}.
GSet product(const GSet& a, const GSet& b);

GSet inverse_set(const GSet& a);

/// A^k, with A^0 = {1}.
GSet power(const GSet& a, unsigned k);

/// 1_A * 1_B(x) = |A cap x B^-1|, iterating the smaller operand.
std::uint64_t conv_value(const GSet& a, const GSet& b, Element x);

/// All nonzero values of 1_A * 1_B.
ConvTable conv_table(const GSet& a, const GSet& b);

/// <1_B * 1_C, 1_D * 1_E> = #{(b, c, d, e) : bc = de}.
std::uint64_t pair_energy(const GSet& b, const GSet& c, const GSet& d, const GSet& e);

/// Sum over x of (1_A * 1_B)(x)^2; pair_energy(A, B, A, B) without the second table.
std::uint64_t self_energy(const GSet& a, const GSet& b);

DoublingStats doubling_stats(const GSet& a);

}  // namespace symgrowth
