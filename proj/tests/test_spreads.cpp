#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gb/spreads.hpp"

using namespace gb;

static void check_is_spread(const Field& F, const std::vector<Subspace>& spread) {
    REQUIRE(static_cast<int>(spread.size()) == F.q() * F.q() + 1);
    std::set<std::string> covered;
    for (const auto& L : spread) {
        REQUIRE(L.k == 2);
        REQUIRE(L.r == 4);
        for (const auto& P : subspaces_of(L, 1)) {
            REQUIRE(covered.insert(P.key()).second);  // pairwise disjoint
        }
    }
    REQUIRE(BigInt(covered.size()) == point_count(4, F.q()));  // covers every point
}

TEST_CASE("a single spread of PG(3,2) covers all 15 points with 5 lines") {
    auto spreads = find_disjoint_line_spreads(field(2, 1), 1);
    REQUIRE(spreads.size() == 1);
    check_is_spread(field(2, 1), spreads[0]);
}

TEST_CASE("three pairwise line-disjoint spreads of PG(3,2)") {
    auto spreads = find_disjoint_line_spreads(field(2, 1), 3);
    REQUIRE(spreads.size() == 3);
    std::set<std::string> all;
    for (const auto& sp : spreads) {
        check_is_spread(field(2, 1), sp);
        for (const auto& L : sp) REQUIRE(all.insert(L.key()).second);
    }
    REQUIRE(all.size() == 15);
}

TEST_CASE("four pairwise line-disjoint spreads of PG(3,3)") {
    auto spreads = find_disjoint_line_spreads(field(3, 1), 4);
    REQUIRE(spreads.size() == 4);
    std::set<std::string> all;
    for (const auto& sp : spreads) {
        check_is_spread(field(3, 1), sp);
        for (const auto& L : sp) REQUIRE(all.insert(L.key()).second);
    }
    REQUIRE(all.size() == 40);
}

TEST_CASE("spread search is deterministic") {
    auto a = find_disjoint_line_spreads(field(2, 1), 3);
    auto b = find_disjoint_line_spreads(field(2, 1), 3);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) REQUIRE(a[i][j].key() == b[i][j].key());
}

TEST_CASE("count bounds are enforced") {
    REQUIRE_THROWS_AS(find_disjoint_line_spreads(field(2, 1), 0), std::domain_error);
    REQUIRE_THROWS_AS(find_disjoint_line_spreads(field(2, 1), 4), std::domain_error);
}
