#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "leviflat/rational.hpp"

namespace leviflat {

/// Dense matrix over an exact commutative ring (GaussianRational or an
/// adjoined-root extension).  The scalar must provide +,-,*, is_zero(),
/// conj(), and equality; division is used only by the field-only routines.
template <typename K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const K& v = x(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    Matrix scaled(const K& c) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix conj() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].conj();
        return r;
    }
    /// Conjugate transpose.
    Matrix adjoint() const { return conj().transpose(); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

using QMatrix = Matrix<GaussianRational>;

int rank(QMatrix m);
GaussianRational determinant(QMatrix m);
QMatrix inverse(const QMatrix& m);
/// Basis of the right kernel, one column per basis vector, deterministic
/// (reduced row echelon with first-found pivots).
QMatrix kernel_basis(const QMatrix& m);
/// Solves m x = b; throws when inconsistent.  For underdetermined systems
/// free variables are set to zero.
QMatrix solve(const QMatrix& m, const QMatrix& b);

}  // namespace leviflat
