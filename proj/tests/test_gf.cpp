#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gb/gf.hpp"

using namespace gb;

static void check_axioms_exhaustive(const Field& F) {
    const int q = F.q();
    for (int a = 0; a < q; ++a) {
        REQUIRE(F.add(a, 0) == a);
        REQUIRE(F.mul(a, 1) == a);
        REQUIRE(F.add(a, F.neg(a)) == 0);
        if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.mul(a, b) == F.mul(b, a));
            for (int c = 0; c < q; ++c) {
                REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
}

TEST_CASE("prime fields behave as integers mod p") {
    const Field& F2 = field(2, 1);
    REQUIRE(F2.add(1, 1) == 0);
    REQUIRE(F2.mul(1, 1) == 1);
    const Field& F3 = field(3, 1);
    REQUIRE(F3.add(1, 2) == 0);
    REQUIRE(F3.mul(2, 2) == 1);
    REQUIRE(F3.inv(2) == 2);
}

TEST_CASE("field axioms hold exhaustively for q <= 81") {
    for (auto [p, e] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3},
                        {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
        if (detail::ipow(p, e) > 81) continue;
        check_axioms_exhaustive(field(p, e));
    }
}

TEST_CASE("field axioms hold on random triples for q > 81") {
    for (auto [p, e] : {std::pair{5, 3}, {7, 3}}) {
        const Field& F = field(p, e);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> dist(0, F.q() - 1);
        for (int t = 0; t < 10'000; ++t) {
            int a = dist(rng), b = dist(rng), c = dist(rng);
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST_CASE("GF(8): primitive element has order 7, all inverses work") {
    const Field& F = field(2, 3);
    int g = F.primitive_element();
    int x = g;
    int order = 1;
    while (x != 1) {
        x = F.mul(x, g);
        ++order;
    }
    REQUIRE(order == 7);
    for (int a = 1; a < 8; ++a) {
        REQUIRE(F.mul(a, F.inv(a)) == 1);
        REQUIRE(F.antilog(F.log(a)) == a);
    }
}

TEST_CASE("Frobenius is an additive bijection") {
    for (auto [p, e] : {std::pair{2, 3}, {3, 2}}) {
        const Field& F = field(p, e);
        std::vector<char> seen(F.q(), 0);
        for (int a = 0; a < F.q(); ++a) {
            int fa = F.frobenius(a);
            REQUIRE(!seen[fa]);
            seen[fa] = 1;
            for (int b = 0; b < F.q(); ++b)
                REQUIRE(F.frobenius(F.add(a, b)) == F.add(fa, F.frobenius(b)));
        }
    }
}

TEST_CASE("re-creating a field reproduces identical tables") {
    const Field& F = field(3, 2);
    Field G(3, 2);
    REQUIRE(F.primitive_element() == G.primitive_element());
    REQUIRE(F.modulus() == G.modulus());
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            REQUIRE(F.mul(a, b) == G.mul(a, b));
            REQUIRE(F.add(a, b) == G.add(a, b));
        }
}

TEST_CASE("unsupported parameters and inv(0) are rejected") {
    REQUIRE_THROWS_AS(Field(11, 1), capability_error);
    REQUIRE_THROWS_AS(Field(2, 4), capability_error);
    REQUIRE_THROWS_AS(field_of_order(6), capability_error);
    REQUIRE_THROWS_AS(field(2, 1).inv(0), std::domain_error);
}

TEST_CASE("digit encoding round-trips") {
    const Field& F = field(3, 3);
    for (int a = 0; a < F.q(); ++a) {
        std::vector<int> d = {F.digit(a, 0), F.digit(a, 1), F.digit(a, 2)};
        REQUIRE(F.from_digits(d) == a);
    }
}
