// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "epmd/field.hpp"

namespace epmd {

// Dense row-major matrix over a GF(2^w) field.  The field is referenced,
// not owned; all operands of a binary operation must share it.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }

    fe at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    fe& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    const fe* row(std::size_t r) const { return a_.data() + r * cols_; }
    fe* row(std::size_t r) { return a_.data() + r * cols_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<fe> a_;
};

// a * b; throws DimensionMismatch unless a.cols == b.rows
Matrix mat_mul(const Matrix& a, const Matrix& b);

// entry-wise sum (in characteristic 2 also the difference)
Matrix mat_add(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

// rank by Gaussian elimination (first non-zero pivot in column order)
std::size_t mat_rank(Matrix m);

// Solves a * x = b for a square `a`; b may have several right-hand-side
// columns.  Throws SingularMatrix when a is not invertible and
// DimensionMismatch on shape errors.
Matrix mat_solve(const Matrix& a, const Matrix& b);

// Solution of an overdetermined consistent system a * x = b (rows >= cols).
// `consistent` is false when elimination leaves a non-zero residual row,
// in which case x is meaningless.  Throws SingularMatrix when a does not
// have full column rank.
struct LeastSolve {
    Matrix x;
    bool consistent = false;
};
LeastSolve mat_solve_rect(const Matrix& a, const Matrix& b);

}  // namespace epmd
