#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "symgrowth/error.hpp"
#include "symgrowth/set_arith.hpp"
#include "symgrowth/symmetry.hpp"

using namespace symgrowth;
using namespace testing_support;

namespace {

// Direct count over AA^-1 with the brute-force overlap.
std::vector<std::uint64_t> brute_sym(const GSet& a, const Rational& eta) {
    const auto& g = a.group();
    std::vector<std::uint64_t> out;
    for (const auto x : brute_product(g, a, inverse_set(a))) {
        if (Rational(Integer(brute_overlap(g, a, x))) >= eta * a.size()) out.push_back(x.code);
    }
    return out;
}

}  // namespace

TEST_CASE("sym_set of an interval") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    const auto s = sym_set(a, make_rational(4, 5));
    CHECK(codes(s.members) == std::vector<std::uint64_t>{0, 1, 19});
    CHECK(codes(s.members) == brute_sym(a, make_rational(4, 5)));
    CHECK(s.eta == make_rational(4, 5));
    CHECK(s.base == a);
    // boundary: conv exactly eta|A| is included
    CHECK(codes(sym_set(a, make_rational(3, 5)).members) == std::vector<std::uint64_t>{0, 1, 2, 18, 19});
    CHECK(codes(sym_set(a, make_rational(2, 5)).members) == std::vector<std::uint64_t>{0, 1, 2, 3, 17, 18, 19});
}

TEST_CASE("sym_set of a subgroup is the subgroup") {
    const auto g = make_dihedral(6);
    auto el = [&](int r, int f) { return g->element_from_json(json::array({r, f})); };
    const GSet h(g, {el(0, 0), el(2, 0), el(4, 0), el(0, 1), el(2, 1), el(4, 1)});
    REQUIRE(product(h, h) == h);
    for (const auto& eta : {make_rational(1), make_rational(1, 2), make_rational(1, 6)}) {
        CHECK(sym_set(h, eta).members == h);
    }
}

TEST_CASE("low thresholds give all of AA^-1") {
    const auto g = make_heisenberg(3);
    std::mt19937_64 rng(3);
    const auto a = random_subset(g, rng, 9, 4);
    CHECK(sym_set(a, make_rational(1, a.size())).members == product(a, inverse_set(a)));
    CHECK(sym_set(a, make_rational(1, 1000)).members == product(a, inverse_set(a)));
}

TEST_CASE("sym_set argument errors") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    CHECK_THROWS_AS(sym_set(a, make_rational(0)), InvalidArgument);
    CHECK_THROWS_AS(sym_set(a, make_rational(6, 5)), InvalidArgument);
    CHECK_THROWS_AS(sym_set(GSet(g), make_rational(1, 2)), EmptySet);
    CHECK_THROWS_AS(check_submultiplicativity(a, make_rational(1, 2), make_rational(1, 2)), InvalidArgument);
    CHECK_THROWS_AS(check_submultiplicativity(a, make_rational(-1, 2), make_rational(1, 4)), InvalidArgument);
    CHECK_THROWS_AS(check_iterated_submultiplicativity(a, make_rational(1, 3), 3), InvalidArgument);
    CHECK_THROWS_AS(check_nesting(a, make_rational(1, 3), make_rational(1, 2)), InvalidArgument);
}

TEST_CASE("nesting examples") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    CHECK(check_nesting(a, make_rational(4, 5), make_rational(4, 5)));
    CHECK(check_nesting(a, make_rational(4, 5), make_rational(2, 5)));
    const auto h = cyc_set(g, {0, 4, 8, 12, 16});
    CHECK(check_nesting(h, make_rational(1), make_rational(1, 2)));
}

TEST_CASE("sub-multiplicativity examples") {
    const auto g = make_cyclic(20);
    const auto a = range_set(g, 0, 4);
    CHECK(check_submultiplicativity(a, 0, 0));
    CHECK(check_submultiplicativity(a, make_rational(1, 5), make_rational(1, 5)));
    // Sym_{4/5}^2 = {18..2} = Sym_{3/5}
    const auto sq = product(sym_set(a, make_rational(4, 5)).members, sym_set(a, make_rational(4, 5)).members);
    CHECK(sq == sym_set(a, make_rational(3, 5)).members);
    const auto h = cyc_set(g, {0, 10});
    CHECK(check_submultiplicativity(h, make_rational(1, 3), make_rational(1, 2)));
}

TEST_CASE("symmetry set structure on random instances") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> den(1, 12);
    for (const auto& g : backend_zoo()) {
        CAPTURE(g->spec().dump());
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = random_subset(g, rng, 14);
            const int d = den(rng);
            std::uniform_int_distribution<int> num(1, d);
            const Rational eta = make_rational(num(rng), d);
            const Rational eta_lower = eta * make_rational(num(rng), d);

            const auto s = sym_set(a, eta);
            CHECK(is_symmetric_neighbourhood(s.members));
            CHECK(is_subset(s.members, product(a, inverse_set(a))));
            CHECK(codes(s.members) == brute_sym(a, eta));
            CHECK(check_nesting(a, eta, eta_lower));

            const Rational eps = make_rational(num(rng) - 1, 2 * d);
            const Rational eps2 = make_rational(num(rng) - 1, 2 * d + 1);
            if (eps + eps2 < 1) CHECK(check_submultiplicativity(a, eps, eps2));
            for (unsigned k = 1; k <= 3; ++k) {
                if (eps * k < 1) CHECK(check_iterated_submultiplicativity(a, eps, k));
            }
        }
    }
}
