#include <catch2/catch_amalgamated.hpp>

#include "gb/bounds.hpp"
#include "gb/codes.hpp"
#include "gb/constructions.hpp"

using namespace gb;

static SpaceMultiset simplex_points(const Field& F) {
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 3;
    ms.h = 1;
    for (const auto& P : enumerate_subspaces(F, 3, 1)) ms.add(P);
    return ms;
}

static SpaceMultiset all_lines_pg42() {
    const Field& F = field(2, 1);
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 5;
    ms.h = 2;
    for (const auto& L : enumerate_subspaces(F, 5, 2)) ms.add(L);
    return ms;
}

TEST_CASE("expand produces one h-block per entry occurrence") {
    const Field& F = field(2, 1);
    auto spread = max_partial_spread_pg4(F);
    auto code = expand(spread);
    REQUIRE(code.n == 9);
    REQUIRE(code.r == 5);
    REQUIRE(code.h == 2);
    REQUIRE(code.G.size() == static_cast<size_t>(5) * 9 * 2);

    SpaceMultiset empty;
    empty.F = &F;
    empty.r = 5;
    empty.h = 2;
    REQUIRE(expand(empty).n == 0);

    // block columns are the entry's generator rows
    auto first_key = spread.mult.begin()->first;
    Subspace s = spread.entry(first_key);
    for (int t = 0; t < 2; ++t)
        for (int i = 0; i < 5; ++i) REQUIRE(code.at(i, t) == s.at(t, i));
}

TEST_CASE("simplex code [7,3]_2: distance 4, hierarchy 4,6,7") {
    auto code = expand(simplex_points(field(2, 1)));
    REQUIRE(min_distance(code) == 4);
    REQUIRE(ghw(code, 1) == 4);
    REQUIRE(ghw(code, 2) == 6);
    REQUIRE(ghw(code, 3) == 7);
}

TEST_CASE("repeated blocks scale the distance") {
    const Field& F = field(2, 1);
    // spanning entry: every nonzero message meets all 4 copies
    SpaceMultiset full;
    full.F = &F;
    full.r = 2;
    full.h = 2;
    full.add(canonical_form(F, {1, 0, 0, 1}, 2, 2), 4);
    REQUIRE(min_distance(expand(full)) == 4);
    // rank-deficient generator: messages orthogonal to the single entry encode to zero
    SpaceMultiset thin;
    thin.F = &F;
    thin.r = 5;
    thin.h = 2;
    thin.add(canonical_form(F, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0}, 2, 5), 4);
    REQUIRE(min_distance(expand(thin)) == 0);
}

TEST_CASE("weight hierarchy is monotone and capped by n") {
    for (const SpaceMultiset& ms :
         {max_partial_spread_pg4(field(2, 1)), eisfeld(field(2, 1), 3)}) {
        auto code = expand(ms);
        long long prev = 0;
        for (int f = 1; f <= code.r; ++f) {
            long long d = ghw(code, f);
            REQUIRE(d >= prev);
            REQUIRE(d <= ms.n());
            prev = d;
        }
    }
}

TEST_CASE("min distance cross-checks against the verifier (hyperplane identity)") {
    auto spread = max_partial_spread_pg4(field(2, 1));
    auto code = expand(spread);
    long long max_solid = verify(spread, 1, VerifyMode::system, 0).max_count;
    REQUIRE(min_distance(code) == spread.n() - max_solid);
    REQUIRE(min_distance(code) == ghw(code, 1));
}

TEST_CASE("ghw identity holds across constructions and f") {
    const Field& F = field(2, 1);
    for (int f : {1, 2, 3}) {
        REQUIRE(check_ghw_identity(max_partial_spread_pg4(F), f).holds);
        REQUIRE(check_ghw_identity(eisfeld(F, 3), f).holds);
        REQUIRE(check_ghw_identity(q2_fold(F), f).holds);
        REQUIRE(check_ghw_identity(all_lines_pg42(), f).holds);
    }
    // single line, every f with h + f <= r
    SpaceMultiset one;
    one.F = &F;
    one.r = 5;
    one.h = 2;
    one.add(canonical_form(F, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0}, 2, 5));
    for (int f = 1; f <= 3; ++f) REQUIRE(check_ghw_identity(one, f).holds);
}

TEST_CASE("specific identity values") {
    const Field& F = field(2, 1);
    auto spread_rep = check_ghw_identity(max_partial_spread_pg4(F), 2);
    REQUIRE(spread_rep.d_f == 8);  // every plane holds at most one line
    REQUIRE(spread_rep.max_count == 1);
    auto all_rep = check_ghw_identity(all_lines_pg42(), 2);
    REQUIRE(all_rep.max_count == 7);
    REQUIRE(all_rep.d_f == 148);
}

TEST_CASE("length bound consistency with the generalized-weight griesmer bound") {
    auto code = expand(simplex_points(field(2, 1)));
    for (int f = 1; f <= 3; ++f) {
        long long df = ghw(code, f);
        REQUIRE(BigInt(code.n) >= ghw_griesmer(2, 3, f, static_cast<int>(df)));
    }
}

TEST_CASE("capability guards") {
    const Field& F = field(2, 1);
    ExpandedCode big;
    big.F = &F;
    big.r = 25;
    big.h = 1;
    big.n = 1;
    big.G.assign(25, 0);
    REQUIRE_THROWS_AS(min_distance(big), limit_error);
    REQUIRE_THROWS_AS(ghw(big, 12), limit_error);
}
