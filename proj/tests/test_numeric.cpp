#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "hopffill/int_matrix.hpp"
#include "hopffill/linalg.hpp"
#include "hopffill/numeric.hpp"
#include "hopffill/smith.hpp"
#include "test_support.hpp"

using namespace hopffill;

namespace {

std::vector<Int> int_vec(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("smith normal form on pinned matrices") {
    SECTION("identity") {
        const SmithForm f = smith_normal_form(IntMatrix::identity(2));
        CHECK(f.diagonal == int_vec({1, 1}));
        CHECK(f.rank == 2);
    }
    SECTION("chain linking matrix of (3,4)") {
        const SmithForm f = smith_normal_form(IntMatrix{{-3, 1}, {1, -4}});
        CHECK(f.diagonal == int_vec({1, 11}));
        CHECK(f.rank == 2);
    }
    SECTION("zero matrix") {
        const SmithForm f = smith_normal_form(IntMatrix::zero(3, 2));
        CHECK(f.diagonal == int_vec({0, 0}));
        CHECK(f.rank == 0);
    }
}

TEST_CASE("smith decomposition: transforms are unimodular and diagonalize") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const std::size_t r = dim(rng), c = dim(rng) + 1;
        const IntMatrix m = test::random_matrix(r, c, rng);
        const SmithDecomposition d = smith_decompose(m);

        CHECK(abs(test::cofactor_det(d.row_transform)) == 1);
        CHECK(abs(test::cofactor_det(d.col_transform)) == 1);

        const IntMatrix prod = d.row_transform * m * d.col_transform;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const Int expected = (i == j && i < d.form.diagonal.size())
                                         ? d.form.diagonal[i]
                                         : Int(0);
                CHECK(prod.at(i, j) == expected);
            }

        // Divisibility chain, zeros trailing.
        for (std::size_t i = 0; i + 1 < d.form.diagonal.size(); ++i) {
            const Int &a = d.form.diagonal[i], &b = d.form.diagonal[i + 1];
            CHECK(a >= 0);
            if (a == 0)
                CHECK(b == 0);
            else
                CHECK(b % a == 0);
        }
    }
}

TEST_CASE("smith invariant factors match the gcd of k x k minors") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const IntMatrix m = test::random_matrix(3, 4, rng, -4, 4);
        const SmithForm f = smith_normal_form(m);
        Int prod = 1;
        for (std::size_t k = 1; k <= f.rank; ++k) {
            prod *= f.diagonal[k - 1];
            CHECK(prod == test::minors_gcd(m, k));
        }
        if (f.rank < f.diagonal.size()) CHECK(test::minors_gcd(m, f.rank + 1) == 0);
    }
}

TEST_CASE("smith form is invariant under unimodular row and column operations") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const IntMatrix m = test::random_matrix(4, 3, rng);
        const IntMatrix u = test::random_unimodular(4, rng);
        const IntMatrix v = test::random_unimodular(3, rng);
        CHECK(smith_normal_form(u * m * v) == smith_normal_form(m));
    }
}

TEST_CASE("solve_rational on pinned systems") {
    SECTION("2x2 chain matrix") {
        const auto x = solve_rational(IntMatrix{{-3, 1}, {1, -4}}, int_vec({1, -2}));
        REQUIRE(x.size() == 2);
        CHECK(x[0] == Rational(-2, 11));
        CHECK(x[1] == Rational(5, 11));
    }
    SECTION("1x1") {
        const auto x = solve_rational(IntMatrix{{-11}}, int_vec({1}));
        CHECK(x[0] == Rational(-1, 11));
    }
    SECTION("identity returns the right-hand side") {
        const auto x = solve_rational(IntMatrix::identity(3), int_vec({7, -2, 0}));
        CHECK(x == std::vector<Rational>{7, -2, 0});
    }
    SECTION("singular matrix is rejected") {
        CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 2}, {2, 4}}, int_vec({1, 1})),
                        SingularMatrix);
    }
}

TEST_CASE("solve_rational multiplied back reproduces the right-hand side") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 40) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t n = dim(rng);
        const IntMatrix m = test::random_matrix(n, n, rng);
        if (test::cofactor_det(m) == 0) continue;
        std::vector<Int> b;
        std::uniform_int_distribution<int> entry(-9, 9);
        for (std::size_t i = 0; i < n; ++i) b.emplace_back(entry(rng));

        const auto x = solve_rational(m, b);
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += Rational(m.at(i, j)) * x[j];
            CHECK(acc == Rational(b[i]));
        }
        ++done;
    }
}

TEST_CASE("signature of pinned forms") {
    CHECK(signature(IntMatrix{{-3, 1}, {1, -4}}) == -2);
    CHECK(signature(IntMatrix{{-11}}) == -1);
    CHECK(signature(IntMatrix::zero(0, 0)) == 0);
    CHECK(signature(IntMatrix::identity(4)) == 4);
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == 0); // hyperbolic plane
    CHECK(signature(IntMatrix{{2, 0, 0}, {0, -5, 0}, {0, 0, 0}}) == 0);
    CHECK(signature(IntMatrix{{0, 0, 3}, {0, 0, 0}, {3, 0, 0}}) == 0);
}

TEST_CASE("signature rejects non-symmetric input") {
    CHECK_THROWS_AS(signature(IntMatrix{{0, 1}, {2, 0}}), NotSymmetric);
    CHECK_THROWS_AS(signature(IntMatrix::zero(2, 3)), NotSymmetric);
}

TEST_CASE("signature is a congruence invariant") {
    std::mt19937 rng(1312);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const std::size_t n = dim(rng);
        const IntMatrix a = test::random_matrix(n, n, rng, -3, 3);
        // Symmetrize.
        const IntMatrix s = IntMatrix::build(
            n, n, [&](std::size_t i, std::size_t j) { return a.at(i, j) + a.at(j, i); });
        const IntMatrix u = test::random_unimodular(n, rng);
        CHECK(signature(u.transpose() * s * u) == signature(s));
    }
}

namespace {

// All congruence images U^T S U with |entries of U| <= bound and det U = +-1.
std::set<std::vector<long long>> congruence_images(const IntMatrix& s, int bound) {
    std::set<std::vector<long long>> images;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    if (a * d - b * c != 1 && a * d - b * c != -1) continue;
                    const IntMatrix u{{a, b}, {c, d}};
                    const IntMatrix img = u.transpose() * s * u;
                    images.insert({to_int64(img.at(0, 0)), to_int64(img.at(0, 1)),
                                   to_int64(img.at(1, 1))});
                }
    return images;
}

} // namespace

TEST_CASE("reduce_binary_form on pinned forms") {
    SECTION("reduces to the chain form") {
        CHECK(reduce_binary_form(IntMatrix{{-4, -1}, {-1, -3}}) ==
              IntMatrix{{-3, 1}, {1, -4}});
    }
    SECTION("already reduced forms are fixed") {
        CHECK(reduce_binary_form(IntMatrix{{-3, 1}, {1, -4}}) == IntMatrix{{-3, 1}, {1, -4}});
        CHECK(reduce_binary_form(IntMatrix{{-2, 1}, {1, -2}}) == IntMatrix{{-2, 1}, {1, -2}});
        CHECK(reduce_binary_form(IntMatrix{{-5, 0}, {0, -7}}) == IntMatrix{{-5, 0}, {0, -7}});
    }
    SECTION("rejects indefinite and positive input") {
        CHECK_THROWS_AS(reduce_binary_form(IntMatrix{{2, 0}, {0, 3}}), NotNegativeDefinite);
        CHECK_THROWS_AS(reduce_binary_form(IntMatrix{{-1, 2}, {2, -1}}), NotNegativeDefinite);
        CHECK_THROWS_AS(reduce_binary_form(IntMatrix{{1, 0}, {0, -1}}), NotNegativeDefinite);
    }
}

TEST_CASE("reduce_binary_form witness certifies the congruence") {
    std::mt19937 rng(555);
    int done = 0;
    while (done < 60) {
        std::uniform_int_distribution<int> entry(-9, -1);
        std::uniform_int_distribution<int> off(-4, 4);
        const int a = entry(rng), c = entry(rng), b = off(rng);
        if (a * c - b * b <= 0) continue;
        const IntMatrix s{{a, b}, {b, c}};
        const auto [form, witness] = reduce_binary_form_with_witness(s);
        CHECK(witness.transpose() * s * witness == form);
        CHECK(abs(test::cofactor_det(witness)) == 1);
        // Convention: negative diagonal, non-negative corner, 2b <= |a| <= |c|.
        CHECK(form.at(0, 0) < 0);
        CHECK(form.at(0, 1) >= 0);
        CHECK(2 * form.at(0, 1) <= -form.at(0, 0));
        CHECK(-form.at(0, 0) <= -form.at(1, 1));
        ++done;
    }
}

TEST_CASE("exhaustive congruence oracle confirms the reduction") {
    // [-4,-1;-1,-3] and [-3,1;1,-4] lie in one congruence class: some
    // bounded unimodular image of the first equals the second.
    const auto images = congruence_images(IntMatrix{{-4, -1}, {-1, -3}}, 3);
    CHECK(images.count({-3, 1, -4}) == 1);

    // No convention-satisfying image of [-2,1;1,-2] differs from itself.
    const auto images2 = congruence_images(IntMatrix{{-2, 1}, {1, -2}}, 3);
    for (const auto& img : images2) {
        const long long a = img[0], b = img[1], c = img[2];
        if (b >= 0 && 2 * b <= -a && -a <= -c) CHECK(img == std::vector<long long>{-2, 1, -2});
    }

    // Congruent inputs reduce identically.
    std::mt19937 rng(808);
    int done = 0;
    while (done < 25) {
        std::uniform_int_distribution<int> entry(-7, -1);
        std::uniform_int_distribution<int> off(-3, 3);
        const int a = entry(rng), c = entry(rng), b = off(rng);
        if (a * c - b * b <= 0) continue;
        const IntMatrix s{{a, b}, {b, c}};
        const IntMatrix u = test::random_unimodular(2, rng);
        CHECK(reduce_binary_form(u.transpose() * s * u) == reduce_binary_form(s));
        ++done;
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(0, 5);
        const std::size_t n = dim(rng);
        const IntMatrix m = test::random_matrix(n, n, rng);
        CHECK(determinant(m) == test::cofactor_det(m));
    }
    CHECK(determinant(IntMatrix::zero(0, 0)) == 1);
}

TEST_CASE("rationals stay reduced with positive denominators") {
    const Rational r(-6, 22);
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 11);
    CHECK(to_string(r) == "-3/11");
    CHECK(to_string(Rational(4, 2)) == "2");
}
