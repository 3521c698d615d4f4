// SPDX-License-Identifier: Apache-2.0

#include "epmd/matrix.hpp"

#include <cassert>

namespace epmd {

namespace {

// eliminates in place; returns the pivot column used for each pivot row
std::vector<std::size_t> row_echelon(Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
        // first non-zero entry in this column at or below prow
        std::size_t sel = prow;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != prow) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(prow, c));
        }
        const fe piv_inv = f.inv(m.at(prow, col));
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == prow) continue;
            const fe v = m.at(rr, col);
            if (v == 0) continue;
            const fe factor = f.mul(v, piv_inv);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m.at(rr, c) = f.add(m.at(rr, c), f.mul(factor, m.at(prow, c)));
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

}  // namespace

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    assert(&a.field() == &b.field());
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const fe av = a.at(i, t);
            if (av == 0) continue;
            const fe* brow = b.row(t);
            fe* orow = out.row(i);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (brow[j] != 0) orow[j] = f.add(orow[j], f.mul(av, brow[j]));
            }
        }
    }
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    assert(&a.field() == &b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("mat_add: shapes differ");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) ^ b.at(i, j);
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

std::size_t mat_rank(Matrix m) { return row_echelon(m).size(); }

// shared elimination path: [a | b] reduced together
static Matrix augmented(const Matrix& a, const Matrix& b) {
    Matrix aug(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    return aug;
}

Matrix mat_solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols()) throw DimensionMismatch("mat_solve: matrix not square");
    if (a.rows() != b.rows()) throw DimensionMismatch("mat_solve: right-hand side rows differ");
    const Field& f = a.field();
    Matrix aug = augmented(a, b);
    std::vector<std::size_t> pivots = row_echelon(aug);
    if (pivots.size() != a.cols() || pivots.back() >= a.cols())
        throw SingularMatrix("mat_solve: singular matrix");
    Matrix x(f, a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        const fe piv_inv = f.inv(aug.at(i, pivots[i]));
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[i], j) = f.mul(piv_inv, aug.at(i, a.cols() + j));
    }
    return x;
}

LeastSolve mat_solve_rect(const Matrix& a, const Matrix& b) {
    if (a.rows() < a.cols()) throw DimensionMismatch("mat_solve_rect: fewer rows than unknowns");
    if (a.rows() != b.rows())
        throw DimensionMismatch("mat_solve_rect: right-hand side rows differ");
    const Field& f = a.field();
    Matrix aug = augmented(a, b);
    std::vector<std::size_t> pivots = row_echelon(aug);

    // pivots inside the coefficient block must cover every unknown
    std::size_t coeff_pivots = 0;
    while (coeff_pivots < pivots.size() && pivots[coeff_pivots] < a.cols()) ++coeff_pivots;
    if (coeff_pivots != a.cols())
        throw SingularMatrix("mat_solve_rect: coefficient matrix lacks full column rank");

    LeastSolve out{Matrix(f, a.cols(), b.cols()), true};
    // a pivot falling in the right-hand block means 0 = non-zero: inconsistent
    if (pivots.size() > coeff_pivots) out.consistent = false;
    for (std::size_t i = 0; i < coeff_pivots; ++i) {
        const fe piv_inv = f.inv(aug.at(i, pivots[i]));
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.x.at(pivots[i], j) = f.mul(piv_inv, aug.at(i, a.cols() + j));
    }
    return out;
}

}  // namespace epmd
