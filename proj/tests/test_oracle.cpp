#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "symgrowth/budget.hpp"
#include "symgrowth/error.hpp"
#include "symgrowth/iteration.hpp"
#include "symgrowth/oracle.hpp"
#include "symgrowth/set_arith.hpp"
#include "symgrowth/symmetry.hpp"

using namespace symgrowth;
using namespace testing_support;

TEST_CASE("oracle_product examples") {
    const auto g = make_cyclic(20);
    CHECK(oracle_product(range_set(g, 0, 4), range_set(g, 0, 4)).size() == 9);
    const auto h = cyc_set(g, {0, 5, 10, 15});
    CHECK(oracle_product(h, h) == h);
    CHECK(oracle_power(h, 0) == cyc_set(g, {0}));
}

TEST_CASE("oracle_quadruples examples") {
    const auto c4 = make_cyclic(4);
    const auto a = cyc_set(c4, {0, 1});
    CHECK(oracle_quadruples(a, a, a, a) == 6);

    const auto c12 = make_cyclic(12);
    const auto h = cyc_set(c12, {0, 3, 6, 9});
    CHECK(oracle_quadruples(h, h, h, h) == 64);

    // BC = {0, 1}, DE = {6, 7}
    CHECK(oracle_quadruples(cyc_set(c12, {0}), cyc_set(c12, {0, 1}), cyc_set(c12, {6}), cyc_set(c12, {0, 1})) == 0);

    ScopedPairBudget budget(15);
    CHECK_THROWS_AS(oracle_quadruples(a, a, a, a), BudgetExceeded);
}

TEST_CASE("fast path agrees with oracles on random small instances") {
    std::mt19937_64 rng(99);
    int instances = 0;
    for (const auto& g : backend_zoo()) {
        CAPTURE(g->spec().dump());
        std::uniform_int_distribution<std::uint64_t> pick(0, g->order() - 1);
        std::uniform_int_distribution<int> den(2, 10);
        for (int trial = 0; trial < 40; ++trial, ++instances) {
            const auto a = random_subset(g, rng, 10);
            const auto b = random_subset(g, rng, 10);
            CHECK(product(a, b) == oracle_product(a, b));
            CHECK(inverse_set(a) == oracle_inverse(a));
            CHECK(power(a, 3) == oracle_power(a, 3));

            const Element x{pick(rng)};
            CHECK(conv_value(a, b, x) == oracle_conv_value(a, b, x));
            const auto table = conv_table(a, b);
            const auto ref = oracle_conv_table(a, b);
            REQUIRE(table.support.size() == ref.size());
            std::size_t i = 0;
            for (const auto& [e, v] : ref) {
                CHECK(table.support[i] == e);
                CHECK(table.values[i] == v);
                ++i;
            }

            const auto c = random_subset(g, rng, 6);
            const auto d = random_subset(g, rng, 6);
            CHECK(pair_energy(a, b, c, d) == oracle_quadruples(a, b, c, d));

            const int q = den(rng);
            std::uniform_int_distribution<int> num(1, q);
            const auto eta = make_rational(num(rng), q);
            CHECK(sym_set(a, eta).members == oracle_sym_set(a, eta));

            const auto ap = random_sub_of(a, rng);
            const auto eps = make_rational(num(rng), q);
            const auto fast = lemma_step(ap, a, eps);
            const auto full = oracle_lemma_step(ap, a, eps);
            CHECK(fast.tau == full.tau);
            CHECK(fast.aprime_a_size == full.aprime_a_size);
            CHECK(fast.level_set == GSet(g, full.level_set));
            CHECK(fast.is_shrink() == full.chosen.has_value());
            if (fast.is_shrink() && full.chosen) {
                CHECK(fast.shrink().witness == *full.chosen);
                CHECK(fast.shrink().shrunk == *full.shrunk);
                CHECK(fast.shrink().shrunk_product_size == full.shrunk_product_size);
            }
        }
    }
    CHECK(instances >= 200);
}

TEST_CASE("verify accepts genuine certificates") {
    const auto g = make_cyclic(20);
    const auto h = cyc_set(g, {0, 5, 10, 15});
    const auto report = verify_certificate(theorem_main(h, 3), h);
    CHECK(report.overall);
    for (const auto& c : report.checks) CHECK_MESSAGE(c.pass, c.name);

    const auto a = range_set(g, 0, 4);
    CHECK(verify_certificate(theorem_main(a, 2), a).overall);
    CHECK(report.to_json().at("overall") == true);
}

TEST_CASE("verify rejects an element of S moved outside A^2 A^-2") {
    const auto g = make_cyclic(40);
    const auto a = range_set(g, 0, 4);
    auto cert = theorem_main(a, 2);
    REQUIRE(verify_certificate(cert, a).overall);
    // A^2 A^-2 = {-8..8}; 20 lies outside
    std::vector<Element> elems(cert.s.begin(), cert.s.end());
    elems.back() = Element{20};
    cert.s = GSet(g, elems);
    const auto report = verify_certificate(cert, a);
    CHECK_FALSE(report.overall);
}

TEST_CASE("verify detects every single-element mutation of S") {
    const auto g = make_dihedral(6);
    std::mt19937_64 rng(4);
    const auto a = random_subset(g, rng, 6, 5);
    const auto cert = theorem_main(a, 1);
    REQUIRE(verify_certificate(cert, a).overall);
    for (std::size_t i = 0; i < cert.s.size(); ++i) {
        // removal
        auto removed = cert;
        std::vector<Element> v(cert.s.begin(), cert.s.end());
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        removed.s = GSet(g, v);
        CHECK_FALSE(verify_certificate(removed, a).overall);
    }
    for (std::uint64_t x = 0; x < g->order(); ++x) {
        if (cert.s.contains(Element{x})) continue;
        auto added = cert;
        std::vector<Element> v(cert.s.begin(), cert.s.end());
        v.push_back(Element{x});
        added.s = GSet(g, v);
        CHECK_FALSE(verify_certificate(added, a).overall);
    }
}

TEST_CASE("verify detects ledger perturbations") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    const auto cert = theorem_main(a, 2);
    for (std::size_t i = 0; i < cert.ledger.size(); ++i) {
        CAPTURE(cert.ledger[i].name);
        auto lhs = cert;
        lhs.ledger[i].lhs += 1;
        CHECK_FALSE(verify_certificate(lhs, a).overall);
        auto rhs = cert;
        rhs.ledger[i].rhs += make_rational(1, 7);
        CHECK_FALSE(verify_certificate(rhs, a).overall);
    }
    auto dropped = cert;
    dropped.ledger.pop_back();
    CHECK_FALSE(verify_certificate(dropped, a).overall);
    auto flag = cert;
    flag.verified = false;
    CHECK_FALSE(verify_certificate(flag, a).overall);
    auto trace = cert;
    trace.trace.steps.front().level_set_size += 1;
    CHECK_FALSE(verify_certificate(trace, a).overall);
}

TEST_CASE("verify rejects a certificate for another set") {
    const auto g = make_cyclic(20);
    const auto cert = theorem_main(range_set(g, 0, 4), 2);
    CHECK_FALSE(verify_certificate(cert, range_set(g, 0, 5)).overall);
}
