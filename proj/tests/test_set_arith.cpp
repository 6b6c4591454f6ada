#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "symgrowth/budget.hpp"
#include "symgrowth/error.hpp"
#include "symgrowth/set_arith.hpp"

using namespace symgrowth;
using namespace testing_support;

TEST_CASE("product of intervals in cyclic(20)") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    const auto ab = product(a, a);
    // brute double loop
    CHECK(ab.size() == brute_product(*g, a, a).size());
    CHECK(ab.size() == 9);
    CHECK(codes(ab) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("subgroup products and empty sets") {
    const auto g = make_cyclic(20);
    const auto h = cyc_set(g, {0, 5, 10, 15});
    CHECK(product(h, h) == h);
    const GSet empty(g);
    CHECK(product(empty, h).empty());
    CHECK(product(h, empty).empty());
    CHECK(inverse_set(empty).empty());
    CHECK(conv_table(empty, h).values.empty());
    CHECK_THROWS_AS(doubling_stats(empty), EmptySet);
}

TEST_CASE("inverse_set") {
    const auto c = make_cyclic(10);
    CHECK(codes(inverse_set(cyc_set(c, {1, 3}))) == std::vector<std::uint64_t>{7, 9});
    const auto d = make_dihedral(4);
    const auto r = d->element_from_json(json::array({1, 0}));
    const auto s = d->element_from_json(json::array({0, 1}));
    const auto r3 = d->element_from_json(json::array({3, 0}));
    CHECK(inverse_set(GSet(d, {r, s})) == GSet(d, {r3, s}));
    const auto sym = cyc_set(c, {0, 1, 9});
    CHECK(inverse_set(sym) == sym);
}

TEST_CASE("power") {
    const auto c = make_cyclic(20);
    CHECK(codes(power(cyc_set(c, {0, 1}), 3)) == std::vector<std::uint64_t>{0, 1, 2, 3});
    const auto h = cyc_set(c, {0, 10});
    CHECK(power(h, 5) == h);
    CHECK(codes(power(h, 0)) == std::vector<std::uint64_t>{0});

    // {r, s}^2 in dihedral(6) by listing the four products: rr, rs, sr = r^5 s, ss = 1
    const auto d = make_dihedral(6);
    auto el = [&](int rot, int flip) { return d->element_from_json(json::array({rot, flip})); };
    const GSet gen(d, {el(1, 0), el(0, 1)});
    CHECK(power(gen, 2) == GSet(d, {el(2, 0), el(1, 1), el(5, 1), el(0, 0)}));
}

TEST_CASE("conv_value") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    const auto a_inv = inverse_set(a);
    CHECK(conv_value(a, a_inv, Element{1}) == 4);
    CHECK(conv_value(a, a_inv, Element{0}) == a.size());
    CHECK(conv_value(a, a, Element{15}) == 0);  // 15 is not in A + A
    // asymmetric sizes exercise both iteration branches
    const auto b = cyc_set(g, {0, 7});
    for (std::uint64_t x = 0; x < 20; ++x) {
        std::uint64_t brute = 0;
        for (const auto p : a)
            for (const auto q : b) brute += (p.code + q.code) % 20 == x ? 1 : 0;
        CHECK(conv_value(a, b, Element{x}) == brute);
        CHECK(conv_value(b, a, Element{x}) == brute);
    }
}

TEST_CASE("conv_table") {
    const auto g = make_cyclic(4);
    const auto a = cyc_set(g, {0, 1});
    const auto t = conv_table(a, a);
    CHECK(codes(t.support) == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(t.values == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(t.at(Element{3}) == 0);

    const auto c = make_cyclic(12);
    const auto h = cyc_set(c, {0, 4, 8});
    const auto th = conv_table(h, h);
    CHECK(th.support == h);
    CHECK(th.values == std::vector<std::uint64_t>{3, 3, 3});

    const auto single = conv_table(cyc_set(c, {5}), cyc_set(c, {9}));
    CHECK(codes(single.support) == std::vector<std::uint64_t>{2});
    CHECK(single.values == std::vector<std::uint64_t>{1});
}

TEST_CASE("pair_energy") {
    const auto g = make_cyclic(4);
    const auto a = cyc_set(g, {0, 1});
    CHECK(pair_energy(a, a, a, a) == 6);  // 1 + 4 + 1

    const auto s4 = make_symmetric(4);
    // Klein four-group inside S4
    const GSet v4(s4, {s4->element_from_json(json::array({0, 1, 2, 3})), s4->element_from_json(json::array({1, 0, 3, 2})),
                       s4->element_from_json(json::array({2, 3, 0, 1})), s4->element_from_json(json::array({3, 2, 1, 0}))});
    CHECK(product(v4, v4) == v4);
    CHECK(pair_energy(v4, v4, v4, v4) == 64);

    const auto c = make_cyclic(20);
    CHECK(pair_energy(cyc_set(c, {0}), cyc_set(c, {1}), cyc_set(c, {5}), cyc_set(c, {5})) == 0);
}

TEST_CASE("doubling_stats") {
    const auto c = make_cyclic(20);
    const auto interval = doubling_stats(range_set(c, 0, 4));
    CHECK(interval.doubling == make_rational(9, 5));
    CHECK(interval.size == 5);
    CHECK(interval.square_size == 9);
    CHECK(interval.difference_size == 9);
    CHECK(interval.double_difference_size == 17);

    const auto h = doubling_stats(cyc_set(c, {0, 5, 10, 15}));
    CHECK(h.doubling == 1);

    // Free-like set in a tabulated S5: all |A|^2 products distinct. Count by
    // brute force and check the near-maximal doubling.
    const auto s5 = make_symmetric(5);
    const auto t = make_table(cayley_table(*s5), 0);
    const auto a = GSet(t, {Element{1}, Element{17}, Element{46}, Element{77}, Element{101}});
    const auto brute = brute_product(*t, a, a).size();
    const auto stats = doubling_stats(a);
    CHECK(stats.square_size == brute);
    CHECK(stats.doubling >= make_rational(4, 1));
    CHECK(stats.doubling <= 5);
}

TEST_CASE("context mismatch and budget") {
    const auto a = range_set(make_cyclic(20), 0, 4);
    const auto b = range_set(make_cyclic(21), 0, 4);
    CHECK_THROWS_AS(product(a, b), ContextMismatch);
    CHECK_THROWS_AS(conv_value(a, b, Element{0}), ContextMismatch);
    CHECK_THROWS_AS(pair_energy(a, a, a, b), ContextMismatch);
    // structurally equal groups built separately are compatible
    CHECK(product(a, range_set(make_cyclic(20), 0, 1)).size() == 6);

    ScopedPairBudget budget(24);
    CHECK_THROWS_AS(product(a, a), BudgetExceeded);
    CHECK(product(a, range_set(make_cyclic(20), 0, 3)).size() == 8);
}

TEST_CASE("convolution and energy properties on random sets") {
    std::mt19937_64 rng(7);
    for (const auto& g : backend_zoo()) {
        CAPTURE(g->spec().dump());
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_subset(g, rng, 12);
            const auto b = random_subset(g, rng, 12);
            const auto c = random_subset(g, rng, 8);

            const auto t = conv_table(a, b);
            CHECK(t.support == product(a, b));
            CHECK(t.total() == a.size() * b.size());
            for (std::size_t i = 0; i < t.values.size(); ++i) CHECK(conv_value(a, b, t.support[i]) == t.values[i]);

            CHECK(product(product(a, b), c) == product(a, product(b, c)));

            // inner-product form vs quadruple count
            std::uint64_t quadruples = 0;
            for (const auto p : a)
                for (const auto q : b)
                    for (const auto r : b)
                        for (const auto s : c) quadruples += g->multiply(p, q) == g->multiply(r, s) ? 1 : 0;
            CHECK(pair_energy(a, b, b, c) == quadruples);

            // <1_A * 1_A', 1_A * 1_A'> = <1_{A^-1} * 1_A, 1_A' * 1_{A'^-1}>
            const auto sub = random_sub_of(a, rng);
            CHECK(pair_energy(a, sub, a, sub) == pair_energy(inverse_set(a), a, sub, inverse_set(sub)));
            CHECK(self_energy(a, sub) == pair_energy(a, sub, a, sub));

            // Cauchy-Schwarz: E(A') >= |A'|^4 / |A'A'| >= |A'|^4 / |A'A|
            const auto e = pair_energy(sub, sub, sub, sub);
            const auto n4 = Integer(sub.size()) * sub.size() * sub.size() * sub.size();
            CHECK(Integer(e) * product(sub, sub).size() >= n4);
            CHECK(product(sub, sub).size() <= product(sub, a).size());
        }
    }
}
