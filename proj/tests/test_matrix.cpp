// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "epmd/matrix.hpp"

using namespace epmd;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<fe>(rng() % f.order());
    return m;
}

// reference determinant by Laplace expansion along the first row
fe ref_det(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    fe acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Matrix minor(f, n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        // signs vanish in characteristic 2
        acc = f.add(acc, f.mul(m.at(0, j), ref_det(minor)));
    }
    return acc;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("identity and multiplication basics") {
        Field f(8);
        Matrix id = Matrix::identity(f, 4);
        CHECK(mat_rank(id) == 4);
        std::mt19937_64 rng(3);
        Matrix a = random_matrix(f, 4, 5, rng);
        CHECK(mat_mul(id, a) == a);
        CHECK(mat_mul(a, Matrix::identity(f, 5)) == a);
        CHECK_THROWS_AS(mat_mul(a, a), DimensionMismatch);
    }

    TEST_CASE("addition is the characteristic-2 difference") {
        Field f(8);
        std::mt19937_64 rng(5);
        Matrix a = random_matrix(f, 3, 4, rng);
        Matrix zero(f, 3, 4);
        CHECK(mat_add(a, a) == zero);
        CHECK(mat_add(a, zero) == a);
        CHECK_THROWS_AS(mat_add(a, Matrix(f, 4, 3)), DimensionMismatch);
    }

    TEST_CASE("multiplication is associative and transposes contravariantly") {
        Field f(16);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 20; ++i) {
            Matrix a = random_matrix(f, 3, 4, rng);
            Matrix b = random_matrix(f, 4, 5, rng);
            Matrix c = random_matrix(f, 5, 2, rng);
            REQUIRE(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
            REQUIRE(transpose(mat_mul(a, b)) == mat_mul(transpose(b), transpose(a)));
        }
    }

    TEST_CASE("rank agrees with the determinant on random square matrices") {
        Field f(8);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            Matrix a = random_matrix(f, 4, 4, rng);
            if (i % 2 == 1) {
                // plant a linear dependency: row 3 = row 0 + c * row 1
                const fe c = static_cast<fe>(rng() % f.order());
                for (std::size_t j = 0; j < 4; ++j)
                    a.at(3, j) = f.add(a.at(0, j), f.mul(c, a.at(1, j)));
            }
            const bool invertible = ref_det(a) != 0;
            if (i % 2 == 1) REQUIRE_FALSE(invertible);
            REQUIRE((mat_rank(a) == 4) == invertible);
        }
    }

    TEST_CASE("rank is invariant under transpose") {
        Field f(8);
        std::mt19937_64 rng(13);
        for (int i = 0; i < 100; ++i) {
            Matrix a = random_matrix(f, 5, 3, rng);
            REQUIRE(mat_rank(a) == mat_rank(transpose(a)));
        }
    }

    TEST_CASE("duplicated column drops the rank") {
        Field f(8);
        std::mt19937_64 rng(17);
        Matrix a = random_matrix(f, 4, 4, rng);
        for (std::size_t i = 0; i < 4; ++i) a.at(i, 3) = a.at(i, 1);
        CHECK(mat_rank(a) < 4);
    }

    TEST_CASE("solve recovers a planted solution and multiplies back") {
        Field f(16);
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 50; ++trial) {
            Matrix a = random_matrix(f, 6, 6, rng);
            while (mat_rank(a) != 6) a = random_matrix(f, 6, 6, rng);
            Matrix x = random_matrix(f, 6, 2, rng);
            Matrix b = mat_mul(a, x);
            Matrix solved = mat_solve(a, b);
            REQUIRE(solved == x);
            REQUIRE(mat_mul(a, solved) == b);
        }
    }

    TEST_CASE("solve rejects singular and misshapen systems") {
        Field f(8);
        Matrix sing(f, 3, 3);  // all zero
        Matrix b(f, 3, 1);
        CHECK_THROWS_AS(mat_solve(sing, b), SingularMatrix);
        std::mt19937_64 rng(23);
        Matrix a = random_matrix(f, 3, 3, rng);
        for (std::size_t i = 0; i < 3; ++i) a.at(i, 2) = a.at(i, 0);  // dependent columns
        CHECK_THROWS_AS(mat_solve(a, b), SingularMatrix);
        CHECK_THROWS_AS(mat_solve(Matrix(f, 3, 4), b), DimensionMismatch);
        CHECK_THROWS_AS(mat_solve(Matrix::identity(f, 3), Matrix(f, 4, 1)), DimensionMismatch);
    }

    TEST_CASE("a distinct-evaluation-point power matrix is invertible") {
        Field f(8);
        // rows: powers 0..3 of four distinct non-zero points
        const fe pts[4] = {0x02, 0x05, 0x11, 0xa3};
        Matrix v(f, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) v.at(i, j) = f.pow(pts[j], i);
        CHECK(mat_rank(v) == 4);
        // repeating a point collapses two columns
        Matrix bad = v;
        for (std::size_t i = 0; i < 4; ++i) bad.at(i, 3) = f.pow(pts[0], i);
        CHECK(mat_rank(bad) == 3);
    }

    TEST_CASE("overdetermined solve checks consistency") {
        Field f(16);
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 50; ++trial) {
            Matrix a0 = random_matrix(f, 4, 4, rng);
            while (mat_rank(a0) != 4) a0 = random_matrix(f, 4, 4, rng);
            // stack extra random rows so the system is genuinely overdetermined
            Matrix extra = random_matrix(f, 3, 4, rng);
            Matrix a(f, 7, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = a0.at(i, j);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) a.at(4 + i, j) = extra.at(i, j);
            Matrix x = random_matrix(f, 4, 1, rng);
            Matrix b = mat_mul(a, x);

            LeastSolve good = mat_solve_rect(a, b);
            REQUIRE(good.consistent);
            REQUIRE(good.x == x);

            Matrix corrupted = b;
            corrupted.at(6, 0) ^= 1;
            LeastSolve bad = mat_solve_rect(a, corrupted);
            REQUIRE_FALSE(bad.consistent);
        }
    }

    TEST_CASE("overdetermined solve requires full column rank") {
        Field f(8);
        Matrix a(f, 4, 2);  // second column zero
        a.at(0, 0) = 1;
        a.at(1, 0) = 2;
        Matrix b(f, 4, 1);
        CHECK_THROWS_AS(mat_solve_rect(a, b), SingularMatrix);
        CHECK_THROWS_AS(mat_solve_rect(Matrix(f, 2, 4), Matrix(f, 2, 1)), DimensionMismatch);
    }
}
