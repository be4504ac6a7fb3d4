#pragma once
// Small dense matrices over Q. Ranks in this problem domain stay tiny
// (catalog maximum is 18), so plain Gaussian elimination with exact
// rationals is the right tool; nothing here is asymptotically clever.

#include <cstddef>
#include <vector>

#include "slopestab/rational.hpp"

namespace slopestab {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Determinant by fraction-free-ish Gaussian elimination (row swaps tracked).
Rat det(const QMatrix& m);

// Leading principal minors d_1..d_n of a square matrix.
std::vector<Rat> leading_principal_minors(const QMatrix& m);

// Solves m x = rhs for square nonsingular m. Throws Error when singular.
std::vector<Rat> solve(const QMatrix& m, const std::vector<Rat>& rhs);

// Inverse of a square nonsingular matrix.
QMatrix inverse(const QMatrix& m);

struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
};

// Exact inertia (eigenvalue sign counts) of a symmetric rational matrix via
// congruence diagonalisation. Works with zero diagonal entries, so it is the
// signature certificate used everywhere; callers wanting the classical
// leading-minor sign test can combine leading_principal_minors with it.
Inertia inertia(const QMatrix& m);

}  // namespace slopestab
