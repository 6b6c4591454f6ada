#include "symgrowth/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "symgrowth/error.hpp"
#include "symgrowth/prng.hpp"

namespace symgrowth {

void Group::check(Element x) const {
    if (!is_valid(x)) {
        throw InvalidElement("encoding " + std::to_string(x.code) + " is not an element of a group of order " +
                             std::to_string(order_));
    }
}

bool Group::same_as(const Group& other) const {
    return this == &other || (order_ == other.order_ && spec() == other.spec());
}

namespace {

std::uint64_t json_uint(const json& value, const char* what) {
    if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    const auto v = value.get<std::int64_t>();
    if (v < 0) throw ParseError(std::string(what) + " must be non-negative");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t required_uint(const json& spec, const char* key) {
    if (!spec.is_object() || !spec.contains(key)) {
        throw ParseError(std::string("group spec is missing '") + key + "'");
    }
    return json_uint(spec.at(key), key);
}

// Reads an integer element field and reduces nothing: out-of-range values are errors.
std::uint64_t element_field(const json& value, std::uint64_t bound, const char* what) {
    if (!value.is_number_integer()) throw InvalidElement(std::string(what) + " must be an integer");
    if (value.is_number_integer() && !value.is_number_unsigned() && value.get<std::int64_t>() < 0) {
        throw InvalidElement(std::string(what) + " must be non-negative");
    }
    const auto v = value.get<std::uint64_t>();
    if (v >= bound) throw InvalidElement(std::string(what) + " out of range");
    return v;
}

class CyclicGroup final : public Group {
public:
    explicit CyclicGroup(std::uint64_t n) : Group(n, Element{0}), n_(n) {}

    json element_to_json(Element x) const override {
        check(x);
        return x.code;
    }
    Element element_from_json(const json& value) const override {
        return Element{element_field(value, n_, "cyclic residue")};
    }
    json spec() const override { return {{"type", "cyclic"}, {"n", n_}}; }

protected:
    Element do_multiply(Element x, Element y) const override {
        const std::uint64_t s = x.code + y.code;  // both < n <= 2^62
        return Element{s >= n_ ? s - n_ : s};
    }
    Element do_inverse(Element x) const override { return Element{x.code == 0 ? 0 : n_ - x.code}; }

private:
    std::uint64_t n_;
};

class DihedralGroup final : public Group {
public:
    explicit DihedralGroup(std::uint64_t n) : Group(2 * n, Element{0}), n_(n) {}

    json element_to_json(Element x) const override {
        check(x);
        return json::array({x.code >> 1U, x.code & 1U});
    }
    Element element_from_json(const json& value) const override {
        if (!value.is_array() || value.size() != 2) {
            throw InvalidElement("dihedral element must be [rotation, flip]");
        }
        const auto rot = element_field(value[0], n_, "dihedral rotation");
        const auto flip = element_field(value[1], 2, "dihedral flip");
        return encode(rot, flip);
    }
    json spec() const override { return {{"type", "dihedral"}, {"n", n_}}; }

protected:
    // r^i s^f . r^j s^g = r^(i + (-1)^f j) s^(f+g)
    Element do_multiply(Element x, Element y) const override {
        const std::uint64_t i = x.code >> 1U, f = x.code & 1U;
        const std::uint64_t j = y.code >> 1U, g = y.code & 1U;
        const std::uint64_t rot = f == 0 ? add(i, j) : add(i, neg(j));
        return encode(rot, f ^ g);
    }
    Element do_inverse(Element x) const override {
        const std::uint64_t i = x.code >> 1U, f = x.code & 1U;
        return f == 1 ? x : encode(neg(i), 0);
    }

private:
    static Element encode(std::uint64_t rot, std::uint64_t flip) { return Element{(rot << 1U) | flip}; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : n_ - a; }

    std::uint64_t n_;
};

std::uint64_t factorial(unsigned n) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

class SymmetricGroup final : public Group {
public:
    explicit SymmetricGroup(unsigned n) : Group(factorial(n), Element{0}), n_(n) {}

    json element_to_json(Element x) const override {
        check(x);
        return permutation_unrank(x.code, n_);
    }
    Element element_from_json(const json& value) const override {
        if (!value.is_array() || value.size() != n_) {
            throw InvalidElement("symmetric(" + std::to_string(n_) + ") element must list " +
                                 std::to_string(n_) + " images");
        }
        std::vector<unsigned> images;
        images.reserve(n_);
        for (const auto& v : value) images.push_back(static_cast<unsigned>(element_field(v, n_, "image")));
        auto sorted = images;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InvalidElement("permutation images are not distinct");
        }
        return Element{permutation_rank(images)};
    }
    json spec() const override { return {{"type", "symmetric"}, {"n", n_}}; }

protected:
    Element do_multiply(Element x, Element y) const override {
        const auto px = permutation_unrank(x.code, n_);
        const auto py = permutation_unrank(y.code, n_);
        std::vector<unsigned> out(n_);
        for (unsigned i = 0; i < n_; ++i) out[i] = px[py[i]];
        return Element{permutation_rank(out)};
    }
    Element do_inverse(Element x) const override {
        const auto px = permutation_unrank(x.code, n_);
        std::vector<unsigned> out(n_);
        for (unsigned i = 0; i < n_; ++i) out[px[i]] = i;
        return Element{permutation_rank(out)};
    }

private:
    unsigned n_;
};

class HeisenbergGroup final : public Group {
public:
    explicit HeisenbergGroup(std::uint64_t p) : Group(p * p * p, Element{0}), p_(p) {}

    json element_to_json(Element x) const override {
        check(x);
        const auto [a, b, c] = split(x);
        return json::array({a, b, c});
    }
    Element element_from_json(const json& value) const override {
        if (!value.is_array() || value.size() != 3) throw InvalidElement("heisenberg element must be [a, b, c]");
        return join(element_field(value[0], p_, "a"), element_field(value[1], p_, "b"),
                    element_field(value[2], p_, "c"));
    }
    json spec() const override { return {{"type", "heisenberg_mod"}, {"p", p_}}; }

protected:
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
    Element do_multiply(Element x, Element y) const override {
        const auto [a, b, c] = split(x);
        const auto [a2, b2, c2] = split(y);
        const std::uint64_t cross = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b2) % p_);
        return join((a + a2) % p_, (b + b2) % p_, (c + c2 + cross) % p_);
    }
    // (a,b,c)^-1 = (-a, -b, ab - c)
    Element do_inverse(Element x) const override {
        const auto [a, b, c] = split(x);
        const std::uint64_t ab = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
        return join(neg(a), neg(b), (ab + neg(c)) % p_);
    }

private:
    struct Triple {
        std::uint64_t a, b, c;
    };
    Triple split(Element x) const { return {x.code / (p_ * p_), (x.code / p_) % p_, x.code % p_}; }
    Element join(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return Element{(a * p_ + b) * p_ + c};
    }
    std::uint64_t neg(std::uint64_t v) const { return v == 0 ? 0 : p_ - v; }

    std::uint64_t p_;
};

std::uint64_t product_order(const std::vector<GroupPtr>& factors) {
    std::uint64_t order = 1;
    for (const auto& f : factors) {
        if (f->order() != 0 && order > std::numeric_limits<std::uint64_t>::max() / 4 / f->order()) {
            throw InvalidArgument("direct product order exceeds the 62-bit encoding range");
        }
        order *= f->order();
    }
    return order;
}

class DirectProductGroup final : public Group {
public:
    DirectProductGroup(std::vector<GroupPtr> factors, std::uint64_t order)
        : Group(order, compose_identity(factors)), factors_(std::move(factors)) {}

    json element_to_json(Element x) const override {
        check(x);
        json out = json::array();
        const auto parts = split(x);
        for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->element_to_json(parts[i]));
        return out;
    }
    Element element_from_json(const json& value) const override {
        if (!value.is_array() || value.size() != factors_.size()) {
            throw InvalidElement("direct product element must have one entry per factor");
        }
        std::vector<Element> parts;
        parts.reserve(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->element_from_json(value[i]));
        return join(factors_, parts);
    }
    json spec() const override {
        json fs = json::array();
        for (const auto& f : factors_) fs.push_back(f->spec());
        return {{"type", "direct_product"}, {"factors", fs}};
    }

protected:
    Element do_multiply(Element x, Element y) const override {
        auto px = split(x);
        const auto py = split(y);
        for (std::size_t i = 0; i < factors_.size(); ++i) px[i] = factors_[i]->multiply(px[i], py[i]);
        return join(factors_, px);
    }
    Element do_inverse(Element x) const override {
        auto px = split(x);
        for (std::size_t i = 0; i < factors_.size(); ++i) px[i] = factors_[i]->inverse(px[i]);
        return join(factors_, px);
    }

private:
    static Element join(const std::vector<GroupPtr>& factors, const std::vector<Element>& parts) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) code = code * factors[i]->order() + parts[i].code;
        return Element{code};
    }
    static Element compose_identity(const std::vector<GroupPtr>& factors) {
        std::vector<Element> parts;
        for (const auto& f : factors) parts.push_back(f->identity());
        return join(factors, parts);
    }
    std::vector<Element> split(Element x) const {
        std::vector<Element> parts(factors_.size());
        std::uint64_t code = x.code;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            parts[i] = Element{code % factors_[i]->order()};
            code /= factors_[i]->order();
        }
        return parts;
    }

    std::vector<GroupPtr> factors_;
};

class TableGroup final : public Group {
public:
    TableGroup(std::vector<std::vector<std::uint32_t>> table, std::uint32_t identity)
        : Group(table.size(), Element{identity}), table_(std::move(table)) {
        validate();
        inverses_.resize(table_.size());
        for (std::uint32_t i = 0; i < table_.size(); ++i) {
            for (std::uint32_t j = 0; j < table_.size(); ++j) {
                if (table_[i][j] == identity) {
                    inverses_[i] = j;
                    break;
                }
            }
        }
    }

    json element_to_json(Element x) const override {
        check(x);
        return x.code;
    }
    Element element_from_json(const json& value) const override {
        return Element{element_field(value, table_.size(), "table index")};
    }
    json spec() const override {
        return {{"type", "table"}, {"identity", identity().code}, {"table", table_}};
    }

protected:
    Element do_multiply(Element x, Element y) const override { return Element{table_[x.code][y.code]}; }
    Element do_inverse(Element x) const override { return Element{inverses_[x.code]}; }

private:
    void validate() const {
        const std::size_t n = table_.size();
        const std::uint32_t e = static_cast<std::uint32_t>(identity().code);
        if (n == 0) throw InvalidArgument("Cayley table is empty");
        if (e >= n) throw InvalidArgument("Cayley table identity index out of range");
        for (const auto& row : table_) {
            if (row.size() != n) throw InvalidArgument("Cayley table is not square");
            for (auto v : row) {
                if (v >= n) throw InvalidArgument("Cayley table entry out of range");
            }
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            if (table_[e][i] != i || table_[i][e] != i) {
                throw InvalidArgument("Cayley table: designated identity is not two-sided");
            }
        }
        // Latin square: every row and column is a permutation, so inverses exist.
        std::vector<std::uint32_t> seen_row(n, 0), seen_col(n, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) {
                if (seen_row[table_[i][j]] == i + 1 || seen_col[table_[j][i]] == i + 1) {
                    throw InvalidArgument("Cayley table is not a Latin square");
                }
                seen_row[table_[i][j]] = i + 1;
                seen_col[table_[j][i]] = i + 1;
            }
        }
        auto associative = [this](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
            return table_[table_[a][b]][c] == table_[a][table_[b][c]];
        };
        if (n <= 512) {
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b)
                    for (std::uint32_t c = 0; c < n; ++c)
                        if (!associative(a, b, c)) throw InvalidArgument("Cayley table is not associative");
        } else {
            constexpr std::uint64_t kSamples = 1U << 18U;
            for (std::uint64_t s = 0; s < kSamples; ++s) {
                const auto a = static_cast<std::uint32_t>(counter_draw(n, 3 * s) % n);
                const auto b = static_cast<std::uint32_t>(counter_draw(n, 3 * s + 1) % n);
                const auto c = static_cast<std::uint32_t>(counter_draw(n, 3 * s + 2) % n);
                if (!associative(a, b, c)) throw InvalidArgument("Cayley table is not associative");
            }
        }
    }

    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverses_;
};

}  // namespace

std::uint64_t permutation_rank(const std::vector<unsigned>& images) {
    const auto n = static_cast<unsigned>(images.size());
    std::uint64_t rank = 0;
    std::uint32_t used = 0;  // n <= 20
    for (unsigned i = 0; i < n; ++i) {
        const unsigned smaller_unused = images[i] - static_cast<unsigned>(__builtin_popcount(used & ((1U << images[i]) - 1U)));
        rank = rank * (n - i) + smaller_unused;
        used |= 1U << images[i];
    }
    return rank;
}

std::vector<unsigned> permutation_unrank(std::uint64_t rank, unsigned n) {
    std::vector<unsigned> digits(n);
    for (unsigned i = n; i-- > 0;) {
        const unsigned radix = n - i;
        digits[i] = static_cast<unsigned>(rank % radix);
        rank /= radix;
    }
    std::vector<unsigned> images(n);
    std::uint32_t used = 0;
    for (unsigned i = 0; i < n; ++i) {
        unsigned d = digits[i];
        unsigned v = 0;
        for (;; ++v) {
            if (used & (1U << v)) continue;
            if (d == 0) break;
            --d;
        }
        images[i] = v;
        used |= 1U << v;
    }
    return images;
}

GroupPtr make_cyclic(std::uint64_t n) {
    if (n == 0 || n > (1ULL << 62U)) throw InvalidArgument("cyclic(n) requires 1 <= n <= 2^62");
    return std::make_shared<CyclicGroup>(n);
}

GroupPtr make_dihedral(std::uint64_t n) {
    if (n == 0 || n > (1ULL << 61U)) throw InvalidArgument("dihedral(n) requires 1 <= n <= 2^61");
    return std::make_shared<DihedralGroup>(n);
}

GroupPtr make_symmetric(unsigned n, unsigned limit) {
    if (n == 0) throw InvalidArgument("symmetric(n) requires n >= 1");
    if (limit > kMaxSymmetricDegree) throw InvalidArgument("symmetric degree limit cannot exceed 20");
    if (n > limit) {
        throw InvalidArgument("symmetric(" + std::to_string(n) + ") exceeds the configured degree limit " +
                              std::to_string(limit));
    }
    return std::make_shared<SymmetricGroup>(n);
}

GroupPtr make_heisenberg(std::uint64_t p) {
    if (p < 2 || p > (1ULL << 20U)) throw InvalidArgument("heisenberg_mod(p) requires 2 <= p <= 2^20");
    return std::make_shared<HeisenbergGroup>(p);
}

GroupPtr make_direct_product(std::vector<GroupPtr> factors) {
    if (factors.empty()) throw InvalidArgument("direct product needs at least one factor");
    for (const auto& f : factors) {
        if (!f) throw InvalidArgument("direct product factor is null");
    }
    const auto order = product_order(factors);
    return std::make_shared<DirectProductGroup>(std::move(factors), order);
}

GroupPtr make_table(std::vector<std::vector<std::uint32_t>> table, std::uint32_t identity) {
    return std::make_shared<TableGroup>(std::move(table), identity);
}

GroupPtr group_from_json(const json& spec, const GroupOptions& options) {
    if (!spec.is_object() || !spec.contains("type") || !spec.at("type").is_string()) {
        throw ParseError("group spec must be an object with a string 'type'");
    }
    const auto type = spec.at("type").get<std::string>();
    if (type == "cyclic") return make_cyclic(required_uint(spec, "n"));
    if (type == "dihedral") return make_dihedral(required_uint(spec, "n"));
    if (type == "symmetric") {
        const auto n = required_uint(spec, "n");
        if (n > kMaxSymmetricDegree) throw InvalidArgument("symmetric(n) supports n <= 20");
        return make_symmetric(static_cast<unsigned>(n), options.symmetric_limit);
    }
    if (type == "heisenberg_mod") return make_heisenberg(required_uint(spec, "p"));
    if (type == "direct_product") {
        if (!spec.contains("factors") || !spec.at("factors").is_array()) {
            throw ParseError("direct_product spec needs a 'factors' array");
        }
        std::vector<GroupPtr> factors;
        for (const auto& f : spec.at("factors")) factors.push_back(group_from_json(f, options));
        return make_direct_product(std::move(factors));
    }
    if (type == "table") {
        if (!spec.contains("table") || !spec.at("table").is_array()) throw ParseError("table spec needs a 'table' array");
        std::vector<std::vector<std::uint32_t>> table;
        for (const auto& row : spec.at("table")) {
            if (!row.is_array()) throw ParseError("table rows must be arrays");
            auto& out = table.emplace_back();
            for (const auto& v : row) {
                const auto x = json_uint(v, "table entry");
                if (x > std::numeric_limits<std::uint32_t>::max()) throw ParseError("table entry too large");
                out.push_back(static_cast<std::uint32_t>(x));
            }
        }
        const auto id = spec.contains("identity") ? json_uint(spec.at("identity"), "identity") : 0;
        if (id > std::numeric_limits<std::uint32_t>::max()) throw ParseError("identity index too large");
        return make_table(std::move(table), static_cast<std::uint32_t>(id));
    }
    throw ParseError("unknown group type '" + type + "'");
}

std::vector<std::vector<std::uint32_t>> cayley_table(const Group& g) {
    if (g.order() > 4096) throw InvalidArgument("cayley_table: group too large to tabulate");
    const auto n = static_cast<std::uint32_t>(g.order());
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            table[i][j] = static_cast<std::uint32_t>(g.multiply(Element{i}, Element{j}).code);
    return table;
}

}  // namespace symgrowth
