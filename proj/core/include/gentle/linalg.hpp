#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gentle {

using Scalar = boost::multiprecision::mpq_rational;

// Dense row-major matrix over the rationals.  Vectors are rows; a matrix
// acts on the right of a row vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix row(int i) const { return block(i, 0, 1, cols_); }
    Matrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Matrix& m);
    // Rows of this matrix followed by rows of other (same column count).
    Matrix stacked(const Matrix& other) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

struct Rref {
    Matrix reduced;
    std::vector<int> pivots;  // pivot column per nonzero row
};

Rref rref(Matrix m);
int rank(const Matrix& m);

// Basis (as rows) of {x : m * x^T = 0}, i.e. the right nullspace written as rows.
Matrix nullspace(const Matrix& m);
// Basis (as rows) of {x : x * m = 0}.
Matrix left_nullspace(const Matrix& m);
// Some X with X * b = y, if one exists.
std::optional<Matrix> solve_left(const Matrix& b, const Matrix& y);
// Indices of standard basis rows that complete the row space of m to the
// whole space, chosen greedily in index order.
std::vector<int> complement_indices(const Matrix& m);

bool is_invertible(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace gentle
