#include <catch2/catch_amalgamated.hpp>

#include "gb/counting.hpp"

using namespace gb;

TEST_CASE("gbin matches the exact table values") {
    REQUIRE(gbin(5, 2, 2) == 155);
    REQUIRE(gbin(5, 2, 3) == 1210);
    REQUIRE(gbin(4, 2, 2) == 35);
    REQUIRE(gbin(5, 3, 3) == 1210);
}

TEST_CASE("gbin edge cases and errors") {
    REQUIRE(gbin(7, 0, 2) == 1);
    REQUIRE(gbin(7, 7, 3) == 1);
    REQUIRE_THROWS_AS(gbin(3, 4, 2), std::domain_error);
    REQUIRE_THROWS_AS(gbin(3, -1, 2), std::domain_error);
}

TEST_CASE("gbin symmetry gbin(a,b,q) = gbin(a,a-b,q)") {
    for (int q : {2, 3, 4, 5})
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= a; ++b) REQUIRE(gbin(a, b, q) == gbin(a, a - b, q));
}

TEST_CASE("gbin equals its recurrence") {
    // [a,b]_q = [a-1,b-1]_q + q^b [a-1,b]_q
    for (int q : {2, 3})
        for (int a = 1; a <= 8; ++a)
            for (int b = 1; b < a; ++b)
                REQUIRE(gbin(a, b, q) == gbin(a - 1, b - 1, q) + big_pow(q, b) * gbin(a - 1, b, q));
}

TEST_CASE("point_count values and convention") {
    REQUIRE(point_count(0, 2) == 0);
    REQUIRE(point_count(0, 7) == 0);
    REQUIRE(point_count(3, 2) == 7);
    REQUIRE(point_count(3, 3) == 13);
    REQUIRE(point_count(1, 5) == 1);
    REQUIRE_THROWS_AS(point_count(-1, 2), std::domain_error);
}

TEST_CASE("disjoint_count values") {
    REQUIRE(disjoint_count(4, 2, 1, 2) == 64);
    REQUIRE(disjoint_count(4, 1, 1, 2) == 112);
    // 155 lines split as equal / meeting / disjoint w.r.t. a fixed line
    REQUIRE(1 + 42 + disjoint_count(4, 1, 1, 2) == gbin(5, 2, 2));
    REQUIRE(disjoint_count(4, 1, 2, 3) == 729);
}

TEST_CASE("big_pow") {
    REQUIRE(big_pow(2, 0) == 1);
    REQUIRE(big_pow(3, 8) == 6561);
    REQUIRE(big_pow(2, 64) == BigInt("18446744073709551616"));
}
