#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

#include "hopffill/errors.hpp"
#include "hopffill/numeric.hpp"

namespace hopffill {

// Dense integer matrix, row-major, immutable once built. Dimensions may be
// zero (the 0x0 matrix is the intersection form of a filling with b2 = 0).
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw InvalidInput("matrix entry count does not match dimensions");
    }

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidInput("ragged matrix rows");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static IntMatrix zero(std::size_t rows, std::size_t cols) {
        return IntMatrix(rows, cols, std::vector<Int>(rows * cols, Int(0)));
    }

    static IntMatrix identity(std::size_t n) {
        auto m = std::vector<Int>(n * n, Int(0));
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
        return IntMatrix(n, n, std::move(m));
    }

    // Entry-wise construction, the builder used throughout the library.
    static IntMatrix build(std::size_t rows, std::size_t cols,
                           const std::function<Int(std::size_t, std::size_t)>& f) {
        std::vector<Int> m;
        m.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.push_back(f(i, j));
        return IntMatrix(rows, cols, std::move(m));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    IntMatrix transpose() const {
        return build(cols_, rows_, [this](std::size_t i, std::size_t j) { return at(j, i); });
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw InvalidInput("matrix product dimension mismatch");
        return build(rows_, rhs.cols_, [&](std::size_t i, std::size_t j) {
            Int acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k) * rhs.at(k, j);
            return acc;
        });
    }

    bool operator==(const IntMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << ',';
            os << '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ',';
                os << at(i, j);
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Exact determinant by rational Gaussian elimination. Empty matrix has
// determinant 1 (empty product).
inline Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw InvalidInput("determinant of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));

    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    // Integer input, so the product of pivots is an integer.
    return numerator(det);
}

} // namespace hopffill
