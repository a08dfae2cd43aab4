#pragma once

#include <cstddef>
#include <vector>

#include "hopffill/int_matrix.hpp"
#include "hopffill/linalg.hpp"
#include "hopffill/numeric.hpp"
#include "hopffill/openbook.hpp"
#include "hopffill/smith.hpp"

namespace hopffill {

// Zero-one matrix with one row per twist occurrence (curves repeated by
// multiplicity, canonical order) and one column per hole. Holes are the
// 1-handles of the filling, the rows its 2-handle attaching circles.
inline IntMatrix incidence_matrix(const Factorization& f) {
    const std::size_t holes = f.page().hole_count();
    std::vector<Int> entries;
    std::size_t rows = 0;
    for (const auto& [curve, mult] : f.curves()) {
        for (long long m = 0; m < mult; ++m) {
            for (std::size_t h = 0; h < holes; ++h)
                entries.emplace_back(curve.contains(h) ? 1 : 0);
            ++rows;
        }
    }
    return IntMatrix(rows, holes, std::move(entries));
}

// Topological invariants of the Stein filling cut out by a positive
// factorization.
struct FillingInvariants {
    long long b2 = 0;
    long long chi = 0;
    long long sigma = 0;
    std::vector<Int> h1_factors;               // empty list = trivial group, 0 = a Z summand
    IntMatrix Q;                               // intersection form, b2 x b2
    Int det_abs = 1;                           // |det Q|, 1 when b2 = 0
    std::vector<std::vector<Int>> kernel_basis; // basis vectors in twist coordinates

    Int h1_order() const { // 0 when H1 is infinite
        Int order = 1;
        for (const Int& d : h1_factors) order *= d;
        return order;
    }
};

// Handle-decomposition bookkeeping for the filling:
//   chi = 1 - #holes + #twists,
//   H1  = cokernel of the transposed incidence map,
//   b2  = #twists - rank,
// and the intersection form is computed on an integral basis v_1..v_{b2} of
// the left kernel of the incidence map as Q_ij = -<v_i, v_j>. Each twist
// contributes self-framing -1 and distinct twists are unlinked in the handle
// picture, which is exactly minus the standard Gram matrix. The kernel basis
// comes from the Smith column transforms and therefore spans the full kernel
// lattice; a finite-index sublattice would inflate |det Q| by a square.
inline FillingInvariants filling_invariants(const Factorization& f) {
    const IntMatrix incidence = incidence_matrix(f);
    const std::size_t twists = incidence.rows();
    const std::size_t holes = incidence.cols();

    // Boundary map of the 2-handles: Z^twists -> Z^holes.
    const IntMatrix boundary = incidence.transpose();
    const SmithDecomposition smith = smith_decompose(boundary);

    FillingInvariants inv;
    inv.chi = 1 - static_cast<long long>(holes) + static_cast<long long>(twists);
    inv.b2 = static_cast<long long>(twists) - static_cast<long long>(smith.form.rank);

    for (std::size_t i = 0; i < smith.form.rank; ++i)
        if (smith.form.diagonal[i] != 1) inv.h1_factors.push_back(smith.form.diagonal[i]);
    for (std::size_t i = smith.form.rank; i < holes; ++i) inv.h1_factors.emplace_back(0);

    // Kernel of the boundary map lives in twist coordinates: the trailing
    // columns of the Smith column transform.
    for (std::size_t j = smith.form.rank; j < twists; ++j) {
        std::vector<Int> v(twists);
        for (std::size_t i = 0; i < twists; ++i) v[i] = smith.col_transform.at(i, j);
        inv.kernel_basis.push_back(std::move(v));
    }

    const std::size_t b2 = inv.kernel_basis.size();
    inv.Q = IntMatrix::build(b2, b2, [&](std::size_t i, std::size_t j) -> Int {
        Int dot = 0;
        for (std::size_t t = 0; t < twists; ++t)
            dot += inv.kernel_basis[i][t] * inv.kernel_basis[j][t];
        return -dot;
    });
    inv.sigma = signature(inv.Q);
    inv.det_abs = abs(determinant(inv.Q));
    return inv;
}

} // namespace hopffill
