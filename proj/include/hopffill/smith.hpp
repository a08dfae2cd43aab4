#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hopffill/int_matrix.hpp"
#include "hopffill/numeric.hpp"

namespace hopffill {

// Invariant factors d_1 | d_2 | ... | d_min(r,c), all non-negative, zeros
// trailing. rank = number of nonzero entries.
struct SmithForm {
    std::vector<Int> diagonal;
    std::size_t rank = 0;

    bool operator==(const SmithForm& o) const {
        return diagonal == o.diagonal && rank == o.rank;
    }
};

// row_transform * M * col_transform == diagonal form, both transforms
// unimodular. col_transform's trailing columns (past rank) are an integral
// basis of ker(M) as a map Z^cols -> Z^rows; since the transform is
// unimodular this basis spans the full kernel lattice, not a finite-index
// sublattice.
struct SmithDecomposition {
    SmithForm form;
    IntMatrix row_transform;
    IntMatrix col_transform;
};

namespace detail {

class SmithWorker {
public:
    explicit SmithWorker(const IntMatrix& m)
        : rows_(m.rows()), cols_(m.cols()),
          a_(rows_, std::vector<Int>(cols_)),
          u_(rows_, std::vector<Int>(rows_, Int(0))),
          v_(cols_, std::vector<Int>(cols_, Int(0))) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) a_[i][j] = m.at(i, j);
        for (std::size_t i = 0; i < rows_; ++i) u_[i][i] = 1;
        for (std::size_t j = 0; j < cols_; ++j) v_[j][j] = 1;
    }

    SmithDecomposition run() {
        const std::size_t steps = std::min(rows_, cols_);
        for (std::size_t t = 0; t < steps; ++t) reduce_block(t);

        SmithForm form;
        for (std::size_t t = 0; t < steps; ++t) {
            form.diagonal.push_back(a_[t][t]);
            if (a_[t][t] != 0) ++form.rank;
        }
        return SmithDecomposition{std::move(form), to_matrix(u_), to_matrix(v_)};
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Int>> a_;
    std::vector<std::vector<Int>> u_; // accumulated row ops
    std::vector<std::vector<Int>> v_; // accumulated column ops

    static IntMatrix to_matrix(const std::vector<std::vector<Int>>& g) {
        const std::size_t r = g.size();
        const std::size_t c = r == 0 ? 0 : g[0].size();
        std::vector<Int> flat;
        flat.reserve(r * c);
        for (const auto& row : g) flat.insert(flat.end(), row.begin(), row.end());
        return IntMatrix(r, c, std::move(flat));
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a_[i], a_[j]);
        std::swap(u_[i], u_[j]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a_) std::swap(row[i], row[j]);
        for (auto& row : v_) std::swap(row[i], row[j]);
    }

    // row i -= q * row t
    void row_sub(std::size_t i, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < cols_; ++k) a_[i][k] -= q * a_[t][k];
        for (std::size_t k = 0; k < rows_; ++k) u_[i][k] -= q * u_[t][k];
    }

    // col j -= q * col t
    void col_sub(std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < rows_; ++k) a_[k][j] -= q * a_[k][t];
        for (std::size_t k = 0; k < cols_; ++k) v_[k][j] -= q * v_[k][t];
    }

    void row_add(std::size_t i, std::size_t src) {
        for (std::size_t k = 0; k < cols_; ++k) a_[i][k] += a_[src][k];
        for (std::size_t k = 0; k < rows_; ++k) u_[i][k] += u_[src][k];
    }

    void negate_row(std::size_t i) {
        for (auto& x : a_[i]) x = -x;
        for (auto& x : u_[i]) x = -x;
    }

    // Smallest nonzero entry by absolute value in the trailing block, or
    // false if the block is zero.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows_; ++i)
            for (std::size_t j = t; j < cols_; ++j) {
                if (a_[i][j] == 0) continue;
                Int mag = abs(a_[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    bool column_clear(std::size_t t) const {
        for (std::size_t i = t + 1; i < rows_; ++i)
            if (a_[i][t] != 0) return false;
        return true;
    }

    bool row_clear(std::size_t t) const {
        for (std::size_t j = t + 1; j < cols_; ++j)
            if (a_[t][j] != 0) return false;
        return true;
    }

    void reduce_block(std::size_t t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) return; // block is zero, d_t = 0
            swap_rows(t, pi);
            swap_cols(t, pj);

            // Clear column then row; a leftover remainder re-enters the loop
            // with a strictly smaller pivot, so this terminates.
            for (std::size_t i = t + 1; i < rows_; ++i) row_sub(i, t, a_[i][t] / a_[t][t]);
            for (std::size_t j = t + 1; j < cols_; ++j) col_sub(j, t, a_[t][j] / a_[t][t]);
            if (!column_clear(t) || !row_clear(t)) continue;

            // Divisibility fix: fold a bad row in and restart the block.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows_ && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols_ && divides_all; ++j)
                    if (a_[i][j] % a_[t][t] != 0) {
                        row_add(t, i);
                        divides_all = false;
                    }
            if (!divides_all) continue;

            if (a_[t][t] < 0) negate_row(t);
            return;
        }
    }
};

} // namespace detail

inline SmithDecomposition smith_decompose(const IntMatrix& m) {
    return detail::SmithWorker(m).run();
}

inline SmithForm smith_normal_form(const IntMatrix& m) {
    return smith_decompose(m).form;
}

// Integral basis of { x in Z^cols : M x = 0 }, one vector per column of the
// column transform past the rank.
inline std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    const SmithDecomposition d = smith_decompose(m);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = d.form.rank; j < m.cols(); ++j) {
        std::vector<Int> v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) v[i] = d.col_transform.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hopffill
