#include <doctest.h>

#include "helpers.hpp"
#include "symgrowth/error.hpp"
#include "symgrowth/instances.hpp"
#include "symgrowth/oracle.hpp"
#include "symgrowth/prng.hpp"
#include "symgrowth/set_arith.hpp"

using namespace symgrowth;
using namespace testing_support;

namespace {

GSet gen(const json& spec) { return generate(InstanceSpec::from_json(spec)); }

}  // namespace

TEST_CASE("subgroup generated by 2 in cyclic(20)") {
    const auto a = gen({{"group", {{"type", "cyclic"}, {"n", 20}}}, {"set", {{"type", "subgroup"}, {"generators", {2}}}}});
    CHECK(codes(a) == std::vector<std::uint64_t>{0, 2, 4, 6, 8, 10, 12, 14, 16, 18});
    CHECK(doubling_stats(a).doubling == 1);
}

TEST_CASE("interval in cyclic(20)") {
    const auto a = gen({{"group", {{"type", "cyclic"}, {"n", 20}}},
                        {"set", {{"type", "interval"}, {"start", 0}, {"length", 5}}}});
    CHECK(codes(a) == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
    CHECK(make_rational(oracle_product(a, a).size(), a.size()) == make_rational(9, 5));
    // wraps around
    const auto w = gen({{"group", {{"type", "cyclic"}, {"n", 10}}},
                        {"set", {{"type", "interval"}, {"start", 8}, {"length", 4}}}});
    CHECK(codes(w) == std::vector<std::uint64_t>{0, 1, 8, 9});
}

TEST_CASE("interval rejects non-cyclic groups and bad lengths") {
    CHECK_THROWS_AS(gen({{"group", {{"type", "dihedral"}, {"n", 6}}},
                         {"set", {{"type", "interval"}, {"start", 0}, {"length", 3}}}}),
                    InvalidArgument);
    CHECK_THROWS(gen({{"group", {{"type", "cyclic"}, {"n", 6}}},
                      {"set", {{"type", "interval"}, {"start", 0}, {"length", 7}}}}));
}

TEST_CASE("ball of radius 2 in dihedral(6)") {
    const auto a = gen({{"group", {{"type", "dihedral"}, {"n", 6}}},
                        {"set", {{"type", "ball"}, {"generators", {{1, 0}, {0, 1}}}, {"radius", 2}}}});
    // 1, r, s, r^2, rs, sr = r^5 s encoded as 2*rot + flip
    CHECK(codes(a) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 11});

    // BFS over the Cayley graph, independent of the generator
    const auto g = make_dihedral(6);
    const std::vector<Element> gens{g->element_from_json(json::array({1, 0})), g->element_from_json(json::array({0, 1}))};
    std::set<Element> ball{g->identity()};
    std::set<Element> layer{g->identity()};
    for (int r = 0; r < 2; ++r) {
        std::set<Element> next;
        for (const auto x : layer)
            for (const auto s : gens) next.insert(g->multiply(x, s));
        ball.insert(next.begin(), next.end());
        layer = next;
    }
    CHECK(a == GSet(g, std::vector<Element>(ball.begin(), ball.end())));
    CHECK(cayley_ball(g, gens, 0) == GSet(g, {g->identity()}));
}

TEST_CASE("coset union") {
    const auto a = gen({{"group", {{"type", "cyclic"}, {"n", 12}}},
                        {"set", {{"type", "coset_union"}, {"generators", {4}}, {"representatives", {0, 1}}}}});
    CHECK(codes(a) == std::vector<std::uint64_t>{0, 1, 4, 5, 8, 9});
}

TEST_CASE("subgroup closure is closed under products and inverses") {
    for (const auto& g : backend_zoo()) {
        CAPTURE(g->spec().dump());
        const std::vector<Element> gens{Element{1 % g->order()}, Element{g->order() - 1}};
        const auto h = subgroup_closure(g, gens);
        CHECK(oracle_product(h, h) == h);
        CHECK(oracle_inverse(h) == h);
        for (const auto s : gens) CHECK(h.contains(s));
    }
    const auto s4 = make_symmetric(4);
    CHECK(subgroup_closure(s4, {s4->element_from_json(json::array({1, 2, 3, 0})),
                                s4->element_from_json(json::array({1, 0, 2, 3}))})
              .size() == 24);
}

TEST_CASE("random sets follow the counter-based stream") {
    const auto g = make_cyclic(1000);
    const auto a = random_set(g, 10, 42);
    CHECK(a.size() == 10);
    CHECK(a == random_set(g, 10, 42));
    CHECK(a != random_set(g, 10, 43));
    // first draws reproduced by hand
    std::set<std::uint64_t> expected;
    for (std::uint64_t i = 0; expected.size() < 10; ++i) expected.insert(counter_draw(42, i) % 1000);
    CHECK(codes(a) == std::vector<std::uint64_t>(expected.begin(), expected.end()));
    CHECK(random_set(make_cyclic(5), 5, 1).size() == 5);
    CHECK_THROWS_AS(random_set(make_cyclic(5), 6, 1), InvalidArgument);
}

TEST_CASE("perturbed subgroup keeps its size and is reproducible") {
    const json spec{{"group", {{"type", "cyclic"}, {"n", 30}}},
                    {"set", {{"type", "perturbed_subgroup"}, {"generators", {3}}, {"swaps", 2}, {"seed", 7}}}};
    const auto a = gen(spec);
    CHECK(a.size() == 10);
    CHECK(a == gen(spec));
    const auto h = subgroup_closure(make_cyclic(30), {Element{3}});
    CHECK(set_difference(a, h).size() == 2);
    json zero = spec;
    zero["set"]["swaps"] = 0;
    CHECK(gen(zero) == h);
}

TEST_CASE("instance specs round-trip") {
    const json spec{{"group", {{"type", "heisenberg_mod"}, {"p", 3}}},
                    {"set", {{"type", "ball"}, {"generators", {{1, 0, 0}, {0, 1, 0}}}, {"radius", 2}}}};
    const auto parsed = InstanceSpec::from_json(spec);
    CHECK(parsed.to_json() == spec);
    CHECK(generate(InstanceSpec::from_json(parsed.to_json())) == generate(parsed));
    CHECK_THROWS_AS(InstanceSpec::from_json({{"group", {{"type", "cyclic"}, {"n", 5}}}}), ParseError);
    CHECK_THROWS_AS(InstanceSpec::from_json({{"group", {{"type", "cyclic"}, {"n", 5}}}, {"set", {{"type", "blob"}}}}),
                    ParseError);
    CHECK_THROWS_AS(gen({{"group", {{"type", "cyclic"}, {"n", 5}}}, {"set", {{"type", "explicit"}, {"elements", {7}}}}}),
                    InvalidElement);
}

TEST_CASE("interval sweep gives doubling (2l - 1) / l") {
    const json base{{"group", {{"type", "cyclic"}, {"n", 40}}},
                    {"set", {{"type", "interval"}, {"start", 0}, {"length", 2}}}};
    const auto rows = family_sweep(base, {"length", {2, 3, 4, 5, 6, 7, 8, 9, 10}});
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::int64_t l = static_cast<std::int64_t>(i) + 2;
        CHECK(rows[i].stats.size == static_cast<std::uint64_t>(l));
        CHECK(rows[i].stats.doubling == make_rational(2 * l - 1, l));
    }
}

TEST_CASE("ball sweep in heisenberg_mod(5) is nested") {
    const json base{{"group", {{"type", "heisenberg_mod"}, {"p", 5}}},
                    {"set", {{"type", "ball"}, {"generators", {{1, 0, 0}, {0, 1, 0}}}, {"radius", 1}}}};
    const auto rows = family_sweep(base, {"radius", {1, 2, 3}});
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].stats.size >= rows[i - 1].stats.size);
        CHECK(is_subset(generate(rows[i - 1].spec), generate(rows[i].spec)));
    }
}

TEST_CASE("group parameter sweep and perturbation sweep") {
    const json base{{"group", {{"type", "cyclic"}, {"n", 20}}},
                    {"set", {{"type", "interval"}, {"start", 0}, {"length", 5}}}};
    const auto rows = family_sweep(base, {"group.n", {10, 20, 30}});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].spec.group->order() == 10);
    for (const auto& r : rows) CHECK(r.stats.doubling == make_rational(9, 5));

    const json perturbed{{"group", {{"type", "cyclic"}, {"n", 60}}},
                         {"set", {{"type", "perturbed_subgroup"}, {"generators", {6}}, {"swaps", 0}, {"seed", 1}}}};
    const auto swaps = family_sweep(perturbed, {"swaps", {0, 1, 2, 3, 4}});
    REQUIRE(swaps.size() == 5);
    CHECK(swaps[0].stats.doubling == 1);
    for (const auto& r : swaps) CHECK(r.stats.size == 10);
}
