#include "mhx/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mhx/error.hpp"

namespace mhx {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m.at(i, j) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) m.at(k, k) = entries[k];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("row dimension mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw InputError("matrix/vector dimension mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(rows_);
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
    return r;
}

Matrix Matrix::pow(std::size_t e) const {
    if (!is_square()) throw InputError("pow of non-square matrix");
    Matrix acc = identity(rows_);
    for (std::size_t k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

Vec Matrix::vectorize() const { return data_; }

Matrix Matrix::devectorize(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw InputError("devectorize dimension mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
    }
    return os << "]";
}

}  // namespace mhx
