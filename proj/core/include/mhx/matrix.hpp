#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mhx/scalar.hpp"

namespace mhx {

/// Dense matrix over the Gaussian rationals. Immutable by convention once
/// built (the library never mutates a matrix it handed out).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major construction from nested lists (used heavily in tests).
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    /// Elementary matrix with a single 1 at (i, j): e_j maps to e_i.
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
    static Matrix diagonal(const std::vector<Scalar>& entries);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    Matrix transpose() const;
    Matrix conj() const;
    bool is_zero() const;
    bool is_real() const;
    bool is_identity() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(std::size_t e) const;

    /// Flattens row-major into a vector of length rows*cols; the coordinate
    /// system used for subspaces of End(V).
    Vec vectorize() const;
    static Matrix devectorize(const Vec& v, std::size_t rows, std::size_t cols);

    std::string str() const;  // compact debug form

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// AB - BA.
Matrix bracket(const Matrix& a, const Matrix& b);

/// Kronecker product (a acts on the left tensor factor).
Matrix kron(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace mhx
