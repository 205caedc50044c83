#include "gentle/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace gentle {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
    Matrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::stacked(const Matrix& o) const {
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    if (cols_ != o.cols_) throw std::invalid_argument("stacking shape mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    r.set_block(0, 0, *this);
    r.set_block(rows_, 0, o);
    return r;
}

Rref rref(Matrix m) {
    Rref out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        Scalar inv = 1 / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Scalar f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (m(row, j) != 0) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const Matrix& m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m).pivots.size());
}

Matrix nullspace(const Matrix& m) {
    const int n = m.cols();
    if (m.rows() == 0) return Matrix::identity(n);
    Rref r = rref(m);
    std::vector<char> is_pivot(n, 0);
    for (int p : r.pivots) is_pivot[p] = 1;
    std::vector<int> free;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix basis(static_cast<int>(free.size()), n);
    for (size_t k = 0; k < free.size(); ++k) {
        basis(static_cast<int>(k), free[k]) = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            basis(static_cast<int>(k), r.pivots[i]) = -r.reduced(static_cast<int>(i), free[k]);
    }
    return basis;
}

Matrix left_nullspace(const Matrix& m) {
    if (m.cols() == 0) return Matrix::identity(m.rows());
    return nullspace(m.transpose());
}

std::optional<Matrix> solve_left(const Matrix& b, const Matrix& y) {
    // X b = y  <=>  b^T X^T = y^T; eliminate on [b^T | y^T].
    if (b.cols() != y.cols()) throw std::invalid_argument("solve_left shape mismatch");
    const int n = b.rows();      // unknowns per row of X
    const int m = y.rows();      // number of right-hand sides
    Matrix aug(b.cols(), n + m);
    aug.set_block(0, 0, b.transpose());
    aug.set_block(0, n, y.transpose());
    Rref r = rref(aug);
    Matrix x(m, n);
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        int p = r.pivots[i];
        if (p >= n) return std::nullopt;
        for (int k = 0; k < m; ++k) x(k, p) = r.reduced(static_cast<int>(i), n + k);
    }
    return x;
}

std::vector<int> complement_indices(const Matrix& m) {
    const int n = m.cols();
    std::vector<int> chosen;
    Matrix current = m;
    int current_rank = rank(current);
    for (int j = 0; j < n && current_rank < n; ++j) {
        Matrix e(1, n);
        e(0, j) = 1;
        Matrix trial = current.stacked(e);
        int r = rank(trial);
        if (r > current_rank) {
            chosen.push_back(j);
            current = std::move(trial);
            current_rank = r;
        }
    }
    return chosen;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::string to_string(const Matrix& m) {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out << "; ";
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    }
    out << ']';
    return out.str();
}

}  // namespace gentle
