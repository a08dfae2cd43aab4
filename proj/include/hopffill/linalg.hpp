#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hopffill/errors.hpp"
#include "hopffill/int_matrix.hpp"
#include "hopffill/numeric.hpp"

namespace hopffill {

// Exact solution of M x = b for square nonsingular integer M.
inline std::vector<Rational> solve_rational(const IntMatrix& m, const std::vector<Int>& b) {
    if (!m.is_square()) throw InvalidInput("solve_rational needs a square matrix");
    const std::size_t n = m.rows();
    if (b.size() != n) throw InvalidInput("right-hand side length mismatch");

    // Augmented rational elimination with partial (first nonzero) pivoting.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
        a[i][n] = Rational(b[i]);
    }

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        std::swap(a[pivot], a[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

// Signature of a symmetric integer matrix, computed by exact congruence
// diagonalization over Q. A zero diagonal pivot with a nonzero off-diagonal
// partner is repaired by the symmetric row+column addition trick, which
// never needs eigenvalues.
inline long long signature(const IntMatrix& s) {
    if (!s.is_square() || !s.is_symmetric()) throw NotSymmetric("signature needs a symmetric matrix");
    const std::size_t n = s.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(s.at(i, j));

    auto sym_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    };
    auto sym_add = [&](std::size_t i, std::size_t j) { // row/col i += row/col j
        for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
        for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
    };

    long long sig = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t j = t + 1;
            for (; j < n; ++j)
                if (a[j][j] != 0) break;
            if (j < n) {
                sym_swap(t, j);
            } else {
                for (j = t + 1; j < n; ++j)
                    if (a[t][j] != 0) break;
                if (j == n) continue; // row t is zero: contributes nothing
                sym_add(t, j);        // a[t][t] becomes 2*a[t][j] != 0
            }
        }
        const Rational& p = a[t][t];
        sig += p > 0 ? 1 : -1;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            const Rational f = a[i][t] / p;
            for (std::size_t k = t; k < n; ++k) a[i][k] -= f * a[t][k];
            for (std::size_t k = t; k < n; ++k) a[k][i] -= f * a[k][t];
        }
    }
    return sig;
}

// Gauss-reduced representative of the integer congruence class of a 2x2
// symmetric negative definite matrix, together with the unimodular witness
// (witness^T * input * witness == reduced).
//
// Convention: output [[a,b],[b,c]] has a,c < 0, b >= 0 and 2b <= |a| <= |c|.
// Each congruence class over GL(2,Z) contains exactly one such matrix, so
// two inputs are congruent iff their reduced forms are equal.
struct ReducedBinaryForm {
    IntMatrix form;
    IntMatrix witness;
};

inline ReducedBinaryForm reduce_binary_form_with_witness(const IntMatrix& s) {
    if (s.rows() != 2 || s.cols() != 2 || !s.is_symmetric())
        throw InvalidInput("reduce_binary_form needs a 2x2 symmetric matrix");
    if (s.at(0, 0) >= 0 || determinant(s) <= 0)
        throw NotNegativeDefinite("form is not negative definite: " + s.str());

    // Reduce the positive definite negation (A,B,C) = -(a,b,c).
    Int A = -s.at(0, 0), B = -s.at(0, 1), C = -s.at(1, 1);
    Int u00 = 1, u01 = 0, u10 = 0, u11 = 1; // accumulated change of basis
    auto apply = [&](const Int& m00, const Int& m01, const Int& m10, const Int& m11) {
        const Int n00 = u00 * m00 + u01 * m10;
        const Int n01 = u00 * m01 + u01 * m11;
        const Int n10 = u10 * m00 + u11 * m10;
        const Int n11 = u10 * m01 + u11 * m11;
        u00 = n00; u01 = n01; u10 = n10; u11 = n11;
    };

    for (;;) {
        // Translate B into (-A/2, A/2]: x -> x - t*y.
        if (2 * abs(B) > A) {
            // Nearest integer to B/A, ties toward +infinity.
            Int t = (2 * B + A) / (2 * A);
            if ((2 * B + A) % (2 * A) != 0 && (2 * B + A) < 0) t -= 1; // floor division
            B -= t * A;
            C += t * t * A - 2 * t * (B + t * A); // uses original B = B_new + t*A
            apply(1, -t, 0, 1);
        }
        if (A > C) {
            std::swap(A, C);
            apply(0, 1, 1, 0);
            continue;
        }
        break;
    }
    if (B < 0) {
        B = -B;
        apply(1, 0, 0, -1);
    }

    // Map back to the negative definite side with the off-diagonal kept
    // non-negative: [[-A, B], [B, -C]] is congruent via diag(1,-1).
    if (B != 0) apply(1, 0, 0, -1);
    IntMatrix reduced{{-A, B}, {B, -C}};
    IntMatrix witness{{u00, u01}, {u10, u11}};
    return ReducedBinaryForm{reduced, witness};
}

inline IntMatrix reduce_binary_form(const IntMatrix& s) {
    return reduce_binary_form_with_witness(s).form;
}

} // namespace hopffill
