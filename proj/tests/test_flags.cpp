#include <catch2/catch_amalgamated.hpp>

#include "gb/flags.hpp"

using namespace gb;

TEST_CASE("flag classes partition the lines and planes of PG(4,q)") {
    for (int q : {2, 3}) {
        auto fc = classify_flag(field_of_order(q));
        size_t lines = 0, planes = 0;
        for (const auto& c : fc.line_classes) lines += c.members.size();
        for (const auto& c : fc.plane_classes) planes += c.members.size();
        REQUIRE(BigInt(lines) == gbin(5, 2, q));
        REQUIRE(BigInt(planes) == gbin(5, 3, q));
        REQUIRE(fc.line_classes.size() == 10);
        REQUIRE(fc.plane_classes.size() == 10);
    }
}

TEST_CASE("beta rows sum to the lines-per-plane count") {
    for (int q : {2, 3}) {
        auto fc = classify_flag(field_of_order(q));
        for (const auto& row : fc.beta) {
            long long sum = 0;
            for (int v : row) sum += v;
            REQUIRE(sum == q * q + q + 1);
        }
    }
}

TEST_CASE("beta is verified constant within plane classes") {
    // classify_flag throws if any plane deviates from its class pattern;
    // reaching here means the check ran over every plane.
    REQUIRE_NOTHROW(classify_flag(field(2, 1)));
    REQUIRE_NOTHROW(classify_flag(field(3, 1)));
}

TEST_CASE("plane-class column of the incidence table: 1, q, q^2") {
    // The class of pi_2 itself (signature (1,2,3,3)): its q^2+q+1 lines
    // split 1 + q + q^2 over the first three line classes.
    for (int q : {2, 3}) {
        auto fc = classify_flag(field_of_order(q));
        REQUIRE(fc.plane_classes[0].signature == FlagSignature{1, 2, 3, 3});
        REQUIRE(fc.beta[0][0] == 1);
        REQUIRE(fc.beta[0][1] == q);
        REQUIRE(fc.beta[0][2] == q * q);
        for (size_t i = 3; i < fc.beta[0].size(); ++i) REQUIRE(fc.beta[0][i] == 0);
    }
}

TEST_CASE("line class through pi_0 meeting pi_1 only there, inside pi_2, has size q") {
    for (int q : {2, 3}) {
        auto fc = classify_flag(field_of_order(q));
        bool found = false;
        for (const auto& c : fc.line_classes)
            if (c.signature == FlagSignature{1, 1, 2, 2}) {
                REQUIRE(static_cast<int>(c.members.size()) == q);
                found = true;
            }
        REQUIRE(found);
    }
}

TEST_CASE("the printed line-class table mismatch is reported, not matched") {
    for (int q : {2, 3}) {
        auto fc = classify_flag(field_of_order(q));
        REQUIRE(fc.line_size_discrepancies.size() == 1);
        int i = fc.line_size_discrepancies[0];
        // enumerated q^2 vs tabulated q^3
        REQUIRE(static_cast<long long>(fc.line_classes[i].members.size()) ==
                static_cast<long long>(q) * q);
        REQUIRE(fc.line_classes[i].tabulated_size == BigInt(q) * q * q);
        REQUIRE(fc.plane_size_discrepancies.empty());
    }
}

TEST_CASE("class members carry the signature of their class") {
    auto fc = classify_flag(field(2, 1));
    for (const auto& c : fc.line_classes)
        for (int li : c.members) {
            FlagSignature sig{};
            for (int t = 0; t < 4; ++t)
                sig[t] = meet_join_dims(fc.lines[li], fc.chamber[t]).first;
            REQUIRE(sig == c.signature);
        }
}
