#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace symgrowth {

using json = nlohmann::json;

/// Canonical element token. Every backend encodes its elements densely in
/// [0, order), so equality and the total order are those of the integer.
struct Element {
    std::uint64_t code = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/// An immutable finite group. Concrete backends override the `do_*` hooks;
/// the public entry points validate encodings first.
class Group {
public:
    virtual ~Group() = default;
    Group(const Group&) = delete;
    Group& operator=(const Group&) = delete;

    Element multiply(Element x, Element y) const {
        check(x);
        check(y);
        return do_multiply(x, y);
    }
    Element inverse(Element x) const {
        check(x);
        return do_inverse(x);
    }
    Element identity() const noexcept { return identity_; }
    std::uint64_t order() const noexcept { return order_; }

    bool is_valid(Element x) const noexcept { return x.code < order_; }
    void check(Element x) const;

    /// Backend-specific JSON form of an element (see README for the table).
    virtual json element_to_json(Element x) const = 0;
    virtual Element element_from_json(const json& value) const = 0;

    /// The group description this backend was built from.
    virtual json spec() const = 0;

    /// Structural equality: same backend kind and parameters.
    bool same_as(const Group& other) const;

protected:
    Group(std::uint64_t order, Element identity) : order_(order), identity_(identity) {}

    virtual Element do_multiply(Element x, Element y) const = 0;
    virtual Element do_inverse(Element x) const = 0;

private:
    std::uint64_t order_;
    Element identity_;
};

using GroupPtr = std::shared_ptr<const Group>;

inline Element multiply(const Group& g, Element x, Element y) { return g.multiply(x, y); }
inline Element inverse(const Group& g, Element x) { return g.inverse(x); }
inline Element identity(const Group& g) { return g.identity(); }

inline constexpr unsigned kDefaultSymmetricLimit = 10;
inline constexpr unsigned kMaxSymmetricDegree = 20;

/// Z/n, encoded by residue.
GroupPtr make_cyclic(std::uint64_t n);

/// Symmetries of the n-gon, order 2n. Element r^i s^f is encoded 2i + f;
/// the defining relation is s r s = r^-1.
GroupPtr make_dihedral(std::uint64_t n);

/// Permutations of {0..n-1}, encoded by lexicographic rank (Lehmer code).
/// Product is composition with the right factor applied first:
/// (x y)(i) = x(y(i)). `limit` guards against accidental huge degrees.
GroupPtr make_symmetric(unsigned n, unsigned limit = kDefaultSymmetricLimit);

/// Upper unitriangular 3x3 matrices over Z/p; element (a, b, c) is
/// [[1, a, c], [0, 1, b], [0, 0, 1]] and is encoded a p^2 + b p + c.
GroupPtr make_heisenberg(std::uint64_t p);

/// Cartesian product; encoding is mixed radix with the first factor most
/// significant, so the canonical order is lexicographic in the factors.
GroupPtr make_direct_product(std::vector<GroupPtr> factors);

/// Explicit Cayley table, table[i][j] = i * j. Validated on construction:
/// identity row/column, Latin square, and associativity (exhaustive for
/// order <= 512, sampled above).
GroupPtr make_table(std::vector<std::vector<std::uint32_t>> table, std::uint32_t identity);

struct GroupOptions {
    unsigned symmetric_limit = kDefaultSymmetricLimit;
};

/// Builds a group from its JSON description, e.g. {"type": "dihedral", "n": 12}.
GroupPtr group_from_json(const json& spec, const GroupOptions& options = {});

/// Lehmer-code helpers for the symmetric backend, exposed for tests and tools.
std::uint64_t permutation_rank(const std::vector<unsigned>& images);
std::vector<unsigned> permutation_unrank(std::uint64_t rank, unsigned n);

/// Cayley table of any enumerable group, e.g. to feed make_table.
std::vector<std::vector<std::uint32_t>> cayley_table(const Group& g);

}  // namespace symgrowth

template <>
struct std::hash<symgrowth::Element> {
    std::size_t operator()(const symgrowth::Element& e) const noexcept {
        return std::hash<std::uint64_t>{}(e.code);
    }
};
