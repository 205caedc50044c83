#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "gentle/linalg.hpp"

using namespace gentle;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int rank_cap) {
    // Product of two small-integer factors, so the rank is at most rank_cap.
    Matrix a(rows, rank_cap), b(rank_cap, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rank_cap; ++j) a(i, j) = static_cast<int>(rng() % 5) - 2;
    for (int i = 0; i < rank_cap; ++i)
        for (int j = 0; j < cols; ++j) b(i, j) = static_cast<int>(rng() % 5) - 2;
    return a * b;
}

int eigen_rank(const Matrix& m) {
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).convert_to<double>();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

}  // namespace

TEST(Linalg, RankAgreesWithFloatingPointOnSmallIntegers) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        Matrix m = random_matrix(rng, r, c, 1 + static_cast<int>(rng() % 4));
        EXPECT_EQ(rank(m), eigen_rank(m)) << to_string(m);
    }
}

TEST(Linalg, NullspacesAnnihilate) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m = random_matrix(rng, 5, 4, 2);
        Matrix n = nullspace(m);
        EXPECT_TRUE((m * n.transpose()).is_zero());
        EXPECT_EQ(rank(m) + n.rows(), m.cols());
        Matrix l = left_nullspace(m);
        EXPECT_TRUE((l * m).is_zero());
        EXPECT_EQ(rank(m) + l.rows(), m.rows());
    }
}

TEST(Linalg, SolveLeftRecoversCoefficients) {
    std::mt19937_64 rng(13);
    Matrix b = random_matrix(rng, 3, 5, 3);
    Matrix x(2, 3);
    x(0, 0) = 1;
    x(1, 2) = Scalar(-3, 2);
    auto got = solve_left(b, x * b);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got * b, x * b);
}

TEST(Linalg, IdentityIsInvertibleAndZeroIsNot) {
    EXPECT_TRUE(is_invertible(Matrix::identity(4)));
    EXPECT_FALSE(is_invertible(Matrix::zero(3, 3)));
    EXPECT_EQ(rank(Matrix::identity(5)), 5);
}
