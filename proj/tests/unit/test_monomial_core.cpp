#include <doctest.h>

#include <limits>
#include <random>

#include "coverlab/errors.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/monomial_ideal.hpp"
#include "coverlab/powers.hpp"
#include "support/oracles.hpp"

using namespace coverlab;
using namespace coverlab::testing;

TEST_CASE("lcm is the componentwise maximum") {
    CHECK(lcm(mono({2, 1}), mono({0, 3})) == mono({2, 3}));
    const auto m = mono({1, 4, 0});
    CHECK(lcm(m, Monomial(3)) == m);
    CHECK(lcm(mono({1, 1}), mono({1, 1})) == mono({1, 1}));
    CHECK_THROWS_AS(lcm(mono({1}), mono({1, 0})), AmbientMismatch);
}

TEST_CASE("divisibility") {
    CHECK(divides(mono({1, 0}), mono({1, 1})));
    CHECK_FALSE(divides(mono({2, 0}), mono({1, 1})));
    const auto cm = crown_monomials(4);
    for (const auto& mi : cm.mi) CHECK(divides(mi, cm.m));
    CHECK_THROWS_AS(divides(mono({1}), mono({1, 1})), AmbientMismatch);
}

TEST_CASE("monomial arithmetic guards exponent overflow") {
    const auto big = mono({std::numeric_limits<Exponent>::max(), 0});
    CHECK_THROWS_AS(big * mono({1, 0}), ExponentOverflow);
    CHECK_THROWS_AS(pow(mono({1u << 20, 1}), 1u << 13), ExponentOverflow);
    CHECK(pow(mono({1, 2}), 3) == mono({3, 6}));
    CHECK(exact_quotient(mono({3, 2}), mono({1, 2})) == mono({2, 0}));
    CHECK_THROWS_AS(exact_quotient(mono({1, 0}), mono({0, 1})), PreconditionError);
}

TEST_CASE("minimalize") {
    // {x, x^2, xy} -> (x)
    const auto I = minimalize(2, {mono({1, 0}), mono({2, 0}), mono({1, 1})});
    CHECK(I == ideal(2, {{1, 0}}));
    CHECK(I.size() == 1);
    CHECK(minimalize(3, {}).is_zero());

    SUBCASE("pairwise products of J(C_{4,4})") {
        const auto J = closed_form_cover_generators(CrownFamily{4}).ideal;
        REQUIRE(J.size() == 6);
        std::vector<Monomial> products;
        for (std::size_t a = 0; a < J.size(); ++a)
            for (std::size_t b = a; b < J.size(); ++b) products.push_back(J.generators()[a] * J.generators()[b]);
        REQUIRE(products.size() == 21);
        const auto square = minimalize(8, products);
        CHECK(generator_set(square) == minimal_elements(products));
        CHECK(square.size() == 15);
        for (const auto& p : products) CHECK(member_naive(square, exps(p)));
    }
}

TEST_CASE("ideal sum, product and intersection") {
    const auto x = ideal(3, {{1, 0, 0}});
    const auto y = ideal(3, {{0, 1, 0}});
    const auto z = ideal(3, {{0, 0, 1}});
    const auto unit = MonomialIdeal::unit(3);

    CHECK(sum(x, y) == ideal(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(sum(x, unit).is_unit());
    CHECK(product(x, y) == ideal(3, {{1, 1, 0}}));
    CHECK(product(sum(x, y), unit) == sum(x, y));
    CHECK(intersect(x, y) == ideal(3, {{1, 1, 0}}));
    CHECK(intersect(sum(x, y), sum(x, z)) == ideal(3, {{1, 0, 0}, {0, 1, 1}}));

    // K_{2,1} over x1_1, x1_2, x2_1: (x2_1) * (x2_1, x1_1 x1_2)
    const auto prod = product(ideal(3, {{0, 0, 1}}), ideal(3, {{0, 0, 1}, {1, 1, 0}}));
    CHECK(prod == ideal(3, {{0, 0, 2}, {1, 1, 1}}));
    CHECK(prod == partial_symbolic_ideal({2, 1}, 2, 1));

    CHECK_THROWS_AS(sum(x, MonomialIdeal::unit(2)), AmbientMismatch);
    CHECK_THROWS_AS(product(x, MonomialIdeal::unit(2)), AmbientMismatch);
    CHECK_THROWS_AS(intersect(x, MonomialIdeal::unit(2)), AmbientMismatch);
}

TEST_CASE("crown cover ideal as an intersection of edge primes") {
    const std::size_t n = 3;
    auto J = MonomialIdeal::unit(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                J = intersect(J, MonomialIdeal(2 * n, {Monomial::variable(2 * n, i),
                                                       Monomial::variable(2 * n, n + j)}));
    const auto cm = crown_monomials(n);
    std::vector<Monomial> expected{cm.mx, cm.my};
    expected.insert(expected.end(), cm.mi.begin(), cm.mi.end());
    CHECK(J == MonomialIdeal(2 * n, expected));
}

TEST_CASE("colon ideals") {
    CHECK(colon(ideal(3, {{2, 1, 0}, {0, 0, 1}}), mono({1, 0, 0})) == ideal(3, {{1, 1, 0}, {0, 0, 1}}));

    const auto cm = crown_monomials(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::vector<Exponent> xy(6, 0);
            xy[i] = xy[3 + i] = 1;
            CHECK(colon(MonomialIdeal::principal(cm.mi[j]), cm.mi[i]) == MonomialIdeal::principal(Monomial(xy)));
        }

    // (N_1^2) : N_2^2 = (M_2^2) over K_{2,2,1}
    const auto mm = multipartite_monomials({2, 2, 1});
    const auto lhs = colon(MonomialIdeal::principal(pow(mm.cofactors[0], 2)), pow(mm.cofactors[1], 2));
    CHECK(lhs == MonomialIdeal::principal(pow(mm.part_products[1], 2)));

    CHECK_THROWS_AS(colon(ideal(2, {{1, 0}}), mono({1})), AmbientMismatch);
}

TEST_CASE("ideal membership") {
    const auto I = ideal(3, {{1, 1, 0}, {1, 0, 1}});
    CHECK(contains(I, mono({1, 1, 1})));
    CHECK_FALSE(contains(I, mono({0, 1, 1})));
    const auto J = closed_form_cover_generators(CrownFamily{3}).ideal;
    const auto cm = crown_monomials(3);
    CHECK(contains(product(J, J), cm.mx * cm.mi[0]));
    CHECK_THROWS_AS(contains(I, mono({1, 1})), AmbientMismatch);
}

TEST_CASE("minimal primes") {
    const auto tri = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    const auto primes = minimal_primes(tri);
    std::set<std::vector<std::size_t>> got;
    for (const auto& p : primes) got.insert({p.variables().begin(), p.variables().end()});
    CHECK(got == minimal_transversals_brute(tri));
    CHECK(got == std::set<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});

    const auto x = minimal_primes(ideal(1, {{1}}));
    REQUIRE(x.size() == 1);
    CHECK(x[0].height() == 1);

    const auto edge = edge_ideal(crown(3));
    const auto crown_primes = minimal_primes(edge);
    std::vector<std::vector<std::size_t>> height3;
    for (const auto& p : crown_primes)
        if (p.height() == 3) height3.push_back({p.variables().begin(), p.variables().end()});
    CHECK(crown_primes.front().height() == 3);
    CHECK(height3 == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5}});

    // non-squarefree input works on the radical
    const auto sq = minimal_primes(ideal(2, {{2, 0}, {1, 3}}));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].variables()[0] == 0);

    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(2)), PreconditionError);
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::zero(2)), PreconditionError);
}

TEST_CASE("prime powers and deg_p") {
    const PrimeSupport p({2, 0});
    CHECK(p.height() == 2);
    CHECK(p.degree_of(mono({2, 5, 1})) == 3);
    const auto sq = p.power(3, 2);
    CHECK(sq == ideal(3, {{2, 0, 0}, {1, 0, 1}, {0, 0, 2}}));
    CHECK(PrimeSupport({1}).power(2, 4) == ideal(2, {{0, 4}}));
    CHECK_THROWS_AS(PrimeSupport({}), PreconditionError);
    CHECK_THROWS_AS(PrimeSupport({1, 1}), PreconditionError);
}

TEST_CASE("random ideal identities") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto I = random_ideal(rng, n, 3, 4);
        const auto J = random_ideal(rng, n, 3, 4);
        const auto K = random_ideal(rng, n, 3, 3);
        const auto u = random_monomial(rng, n, 3);

        // canonical form: no generator divides another, and idempotence
        for (const auto& g : I.generators())
            for (const auto& h : I.generators())
                if (!(g == h)) CHECK_FALSE(divides(g, h));
        CHECK(minimalize(n, {I.generators().begin(), I.generators().end()}) == I);

        CHECK(sum(I, J) == sum(J, I));
        CHECK(product(I, J) == product(J, I));
        CHECK(intersect(I, J) == intersect(J, I));
        CHECK(sum(sum(I, J), K) == sum(I, sum(J, K)));
        CHECK(product(product(I, J), K) == product(I, product(J, K)));
        CHECK(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)));

        const auto IJ = intersect(I, J);
        CHECK(contains(I, IJ));
        CHECK(contains(J, IJ));
        const auto quotient = colon(I, u);
        for (const auto& m : all_monomials_bounded(n, 3)) {
            CHECK(contains(quotient, m) == contains(I, u * m));
            CHECK(contains(IJ, m) == (contains(I, m) && contains(J, m)));
            CHECK(contains(sum(I, J), m) == (contains(I, m) || contains(J, m)));
        }
        // I : J against the defining property on generators of J
        const auto IcJ = colon(I, J);
        for (const auto& m : all_monomials_bounded(n, 2)) {
            bool expected = true;
            for (const auto& g : J.generators()) expected = expected && contains(I, g * m);
            CHECK(contains(IcJ, m) == expected);
        }
    }
}

TEST_CASE("squarefree ideals are the intersection of their minimal primes") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const auto I = random_squarefree_ideal(rng, n, 5);
        if (I.is_unit()) continue;
        const auto primes = minimal_primes(I);
        std::set<std::vector<std::size_t>> got;
        auto meet = MonomialIdeal::unit(n);
        for (const auto& p : primes) {
            got.insert({p.variables().begin(), p.variables().end()});
            meet = intersect(meet, p.to_ideal(n));
        }
        CHECK(got == minimal_transversals_brute(I));
        CHECK(meet == I);
    }
}
