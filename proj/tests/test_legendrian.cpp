#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hopffill/continued_fraction.hpp"
#include "hopffill/legendrian.hpp"
#include "hopffill/linalg.hpp"
#include "hopffill/numeric.hpp"

using namespace hopffill;

TEST_CASE("legendrian components derive tb and rot from the stabilizations") {
    const LegendrianComponent c(4, 1, 1);
    CHECK(c.tb() == -3);
    CHECK(c.rot() == 0);
    CHECK(LegendrianComponent(2, 0, 0).tb() == -1);
    CHECK(LegendrianComponent(5, 3, 0).rot() == 3);

    CHECK_THROWS_AS(LegendrianComponent(1, 0, 0), InvalidInput);
    CHECK_THROWS_AS(LegendrianComponent(4, 2, 1), InvalidInput);
    CHECK_THROWS_AS(LegendrianComponent(4, -1, 3), InvalidInput);
}

TEST_CASE("linking matrix of a chain") {
    CHECK(linking_matrix(make_chain({3, 4}, {{1, 0}, {0, 2}})) ==
          IntMatrix{{-3, 1}, {1, -4}});
    CHECK(linking_matrix(make_chain({6}, {{4, 0}})) == IntMatrix{{-6}});
    CHECK(linking_matrix(make_chain({2, 2, 2}, {{0, 0}, {0, 0}, {0, 0}})) ==
          IntMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
}

TEST_CASE("structure classification reads the zig-zag sides") {
    CHECK(classify_structure(make_chain({3, 4}, {{1, 0}, {2, 0}})) ==
          StructureKind::UniversallyTight);
    CHECK(classify_structure(make_chain({3, 4}, {{1, 0}, {0, 2}})) ==
          StructureKind::VirtuallyOvertwisted);
    CHECK(classify_structure(make_chain({2, 2}, {{0, 0}, {0, 0}})) ==
          StructureKind::UniversallyTight);
    // A single mixed component is enough.
    CHECK(classify_structure(make_chain({4}, {{1, 1}})) ==
          StructureKind::VirtuallyOvertwisted);
    // All negative is universally tight too.
    CHECK(classify_structure(make_chain({3, 4}, {{0, 1}, {0, 2}})) ==
          StructureKind::UniversallyTight);
}

TEST_CASE("structure classification is invariant under a global sign flip") {
    for (long long a1 = 2; a1 <= 5; ++a1)
        for (long long a2 = 2; a2 <= 5; ++a2)
            for (long long s1 = 0; s1 <= a1 - 2; ++s1)
                for (long long s2 = 0; s2 <= a2 - 2; ++s2) {
                    const auto chain = make_chain({a1, a2}, {{s1, a1 - 2 - s1}, {s2, a2 - 2 - s2}});
                    CHECK(classify_structure(chain) == classify_structure(chain.conjugate()));
                }
}

TEST_CASE("enumerate_structures on pinned fractions") {
    SECTION("[3,4] has six isotopy and three contactomorphism classes") {
        const auto s = enumerate_structures(ContinuedFraction({3, 4}));
        REQUIRE(s.entries.size() == 6);
        CHECK(s.class_representatives.size() == 3);
        // Universally tight exactly when the signs agree.
        int ut = 0;
        for (const auto& e : s.entries)
            if (e.kind == StructureKind::UniversallyTight) ++ut;
        CHECK(ut == 2); // (+1,+2) and (-1,-2)
    }
    SECTION("[2] has the single structure rot = 0") {
        const auto s = enumerate_structures(ContinuedFraction({2}));
        REQUIRE(s.entries.size() == 1);
        CHECK(s.entries[0].rot == std::vector<long long>{0});
        CHECK(s.class_representatives.size() == 1);
    }
    SECTION("[5] has four structures in two conjugate pairs") {
        const auto s = enumerate_structures(ContinuedFraction({5}));
        REQUIRE(s.entries.size() == 4);
        std::vector<long long> rots;
        for (const auto& e : s.entries) rots.push_back(e.rot[0]);
        CHECK(rots == std::vector<long long>{-3, -1, 1, 3});
        CHECK(s.class_representatives.size() == 2);
    }
}

TEST_CASE("enumerate_structures counts the product of (a_i - 1)") {
    std::vector<std::vector<long long>> cfs;
    for (long long a = 2; a <= 6; ++a) cfs.push_back({a});
    for (long long a = 2; a <= 6; ++a)
        for (long long b = 2; b <= 6; ++b) cfs.push_back({a, b});
    for (long long a = 2; a <= 6; ++a)
        for (long long b = 2; b <= 6; ++b)
            for (long long c = 2; c <= 6; ++c) cfs.push_back({a, b, c});

    for (const auto& terms : cfs) {
        std::size_t expected = 1;
        for (long long a : terms) expected *= static_cast<std::size_t>(a - 1);
        const auto s = enumerate_structures(ContinuedFraction(terms));
        CHECK(s.entries.size() == expected);
        // Conjugation pairs entries; the all-zero vector is the only fixed point.
        bool has_zero = true;
        for (long long a : terms) has_zero = has_zero && (a % 2 == 0);
        const std::size_t orbits = (expected + (has_zero ? 1 : 0)) / 2;
        CHECK(s.class_representatives.size() == orbits);
    }
}

TEST_CASE("d3 golden values on the (3,4) chain") {
    const IntMatrix q{{-3, 1}, {1, -4}};
    CHECK(d3(D3Input{q, {Int(1), Int(-2)}, 3, -2}) == Rational(-3, 11));
    CHECK(d3(D3Input{q, {Int(1), Int(0)}, 3, -2}) == Rational(-1, 11));
    CHECK(d3(D3Input{q, {Int(1), Int(2)}, 3, -2}) == Rational(-5, 11));
}

TEST_CASE("d3 golden values for the single -11-framed handle") {
    CHECK(d3(D3Input{IntMatrix{{-11}}, {Int(1)}, 2, -1}) == Rational(-3, 11));
    CHECK(d3(D3Input{IntMatrix{{-11}}, {Int(3)}, 2, -1}) == Rational(-5, 11));
}

TEST_CASE("d3 rejects singular, asymmetric and mismatched input") {
    CHECK_THROWS_AS(d3(D3Input{IntMatrix{{1, 2}, {2, 4}}, {Int(1), Int(1)}, 3, 0}),
                    SingularMatrix);
    CHECK_THROWS_AS(d3(D3Input{IntMatrix{{-2}}, {Int(1), Int(1)}, 2, -1}), InvalidInput);
    CHECK_THROWS_AS(d3(D3Input{IntMatrix{{0, 1}, {2, 0}}, {Int(1), Int(1)}, 3, 0}),
                    NotSymmetric);
}

TEST_CASE("d3_of_chain packages the chain data") {
    CHECK(d3_of_chain(make_chain({3, 4}, {{1, 0}, {0, 2}})) == Rational(-3, 11));
    CHECK(d3_of_chain(make_chain({3, 4}, {{1, 0}, {2, 0}})) == Rational(-5, 11));
    CHECK(d3_of_chain(make_chain({3, 4}, {{1, 0}, {1, 1}})) == Rational(-1, 11));
}

TEST_CASE("d3 is conjugation invariant and satisfies the defining identity") {
    for (long long a1 = 2; a1 <= 6; ++a1)
        for (long long a2 = 2; a2 <= 6; ++a2)
            for (long long s1 = 0; s1 <= a1 - 2; ++s1)
                for (long long s2 = 0; s2 <= a2 - 2; ++s2) {
                    const auto chain = make_chain({a1, a2}, {{s1, a1 - 2 - s1}, {s2, a2 - 2 - s2}});
                    CHECK(d3_of_chain(chain) == d3_of_chain(chain.conjugate()));

                    // 4*d3 + 3*sigma + 2*chi == rot . Q^{-1} . rot
                    const D3Input input = d3_input_of_chain(chain);
                    const Rational lhs =
                        4 * d3_of_chain(chain) + 3 * Rational(input.sigma) + 2 * Rational(input.chi);
                    const auto x = solve_rational(input.Q, input.rot);
                    Rational rhs = 0;
                    for (std::size_t i = 0; i < x.size(); ++i)
                        rhs += Rational(input.rot[i]) * x[i];
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("rot parity matches a_i across enumerated structures") {
    const auto s = enumerate_structures(ContinuedFraction({4, 5}));
    for (const auto& e : s.entries) {
        CHECK((e.rot[0] - (4 - 2)) % 2 == 0);
        CHECK((e.rot[1] - (5 - 2)) % 2 == 0);
    }
}
