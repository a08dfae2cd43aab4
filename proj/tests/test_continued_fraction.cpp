#include <catch2/catch_amalgamated.hpp>

#include "hopffill/continued_fraction.hpp"
#include "hopffill/numeric.hpp"

using namespace hopffill;

TEST_CASE("cf_expand pinned expansions") {
    CHECK(cf_expand(11, 4).terms() == std::vector<long long>{3, 4});
    CHECK(cf_expand(5, 1).terms() == std::vector<long long>{5});
    CHECK(cf_expand(7, 5).terms() == std::vector<long long>{2, 2, 3});
}

TEST_CASE("cf_expand validates its input") {
    CHECK_THROWS_AS(cf_expand(4, 4), InvalidInput);
    CHECK_THROWS_AS(cf_expand(3, 5), InvalidInput);
    CHECK_THROWS_AS(cf_expand(10, 4), InvalidInput); // gcd 2
    CHECK_THROWS_AS(cf_expand(5, 0), InvalidInput);
    CHECK_THROWS_AS(cf_expand(5, -1), InvalidInput);
}

TEST_CASE("cf_value pinned evaluations") {
    CHECK(cf_value(ContinuedFraction({3, 4})) == std::pair<Int, Int>(11, 4));
    CHECK(cf_value(ContinuedFraction({7})) == std::pair<Int, Int>(7, 1));
    CHECK(cf_value(ContinuedFraction({2, 2, 2})) == std::pair<Int, Int>(4, 3));
}

TEST_CASE("continued fraction terms must be at least 2") {
    CHECK_THROWS_AS(ContinuedFraction({}), InvalidInput);
    CHECK_THROWS_AS(ContinuedFraction({3, 1}), InvalidInput);
    CHECK_THROWS_AS(ContinuedFraction({0}), InvalidInput);
}

TEST_CASE("cf_value inverts cf_expand for all coprime p/q up to 500") {
    for (long long p = 2; p <= 500; ++p)
        for (long long q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            const ContinuedFraction cf = cf_expand(p, q);
            for (long long a : cf.terms()) REQUIRE(a >= 2);
            const auto [vp, vq] = cf_value(cf);
            REQUIRE(vp == p);
            REQUIRE(vq == q);
        }
}
