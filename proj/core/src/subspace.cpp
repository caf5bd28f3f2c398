#include "mhx/subspace.hpp"

#include <algorithm>

#include "mhx/error.hpp"

namespace mhx {

std::vector<std::size_t> rref(std::vector<Vec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Scalar inv = rows[r][c].inverse();
        for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar f = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
        Vec e(ambient);
        e[k] = Scalar(1);
        s.basis_.push_back(std::move(e));
        s.pivots_.push_back(k);
    }
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    for (const Vec& v : vectors)
        if (v.size() != ambient) throw InputError("subspace generator dimension mismatch");
    s.basis_ = vectors;
    s.pivots_ = rref(s.basis_);
    return s;
}

Subspace Subspace::line(const Vec& v) { return span({v}, v.size()); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw InputError("membership dimension mismatch");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar f = w[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_[i][j];
    }
    return mhx::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("membership dimension mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("subspace sum dimension mismatch");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("subspace intersect dimension mismatch");
    // Zassenhaus: rref of [A|A; B|0]; rows with vanishing left half carry a
    // basis of the intersection in the right half.
    std::vector<Vec> rows;
    rows.reserve(dim() + other.dim());
    for (const Vec& a : basis_) {
        Vec r(2 * ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = r[ambient_ + j] = a[j];
        rows.push_back(std::move(r));
    }
    for (const Vec& b : other.basis_) {
        Vec r(2 * ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = b[j];
        rows.push_back(std::move(r));
    }
    rref(rows);
    std::vector<Vec> inter;
    for (const Vec& r : rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < ambient_ && left_zero; ++j) left_zero = r[j].is_zero();
        if (left_zero) inter.emplace_back(r.begin() + static_cast<long>(ambient_), r.end());
    }
    return span(inter, ambient_);
}

Subspace Subspace::conjugate() const {
    std::vector<Vec> rows;
    rows.reserve(basis_.size());
    for (const Vec& v : basis_) rows.push_back(conj(v));
    return span(rows, ambient_);
}

Subspace Subspace::image_under(const Matrix& m) const {
    if (m.cols() != ambient_) throw InputError("image dimension mismatch");
    std::vector<Vec> rows;
    rows.reserve(basis_.size());
    for (const Vec& v : basis_) rows.push_back(m.apply(v));
    return span(rows, m.rows());
}

Subspace Subspace::preimage_under(const Matrix& m) const {
    if (m.rows() != ambient_) throw InputError("preimage dimension mismatch");
    // { v : m v in S }  =  kernel of (ann_S * m).
    Matrix ann = annihilator();
    if (ann.rows() == 0) return Subspace::full(m.cols());
    return kernel(ann * m);
}

Matrix Subspace::annihilator() const {
    if (basis_.empty()) return Subspace::full(ambient_).basis_matrix();
    Subspace k = kernel(basis_matrix());
    return k.basis_matrix();
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

Subspace combine(const Subspace& a, const Subspace& b, CombineMode mode) {
    return mode == CombineMode::Sum ? a.sum(b) : a.intersect(b);
}

Subspace conjugate_subspace(const Subspace& a) { return a.conjugate(); }

Subspace rref_basis(const std::vector<Vec>& vectors, std::size_t ambient) {
    return Subspace::span(vectors, ambient);
}

Subspace kernel(const Matrix& a) {
    std::vector<Vec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    const std::vector<std::size_t> pivots = rref(rows);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec x(a.cols());
        x[j] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][j];
        basis.push_back(std::move(x));
    }
    return Subspace::span(basis, a.cols());
}

Subspace image(const Matrix& a) {
    std::vector<Vec> cols;
    cols.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
    return Subspace::span(cols, a.rows());
}

std::size_t rank(const Matrix& a) { return image(a).dim(); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw InputError("solve dimension mismatch");
    std::vector<Vec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        r.push_back(b[i]);
        rows.push_back(std::move(r));
    }
    const std::vector<std::size_t> pivots = rref(rows);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][a.cols()];
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) throw InputError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Vec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = a.row(i);
        r.resize(2 * n);
        r[n + i] = Scalar(1);
        rows.push_back(std::move(r));
    }
    const std::vector<std::size_t> pivots = rref(rows);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rows[i][n + j];
    return inv;
}

Subspace echelon_complement(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner)) throw InputError("echelon_complement: not nested");
    std::vector<bool> taken(outer.ambient(), false);
    for (std::size_t p : inner.pivots()) taken[p] = true;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < outer.dim(); ++i)
        if (!taken[outer.pivots()[i]]) rows.push_back(outer.basis()[i]);
    return Subspace::span(rows, outer.ambient());
}

Vec coordinates(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient()) throw InputError("coordinates dimension mismatch");
    Vec w = v;
    Vec coords(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Scalar f = w[s.pivots()[i]];
        coords[i] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < s.ambient(); ++j) w[j] -= f * s.basis()[i][j];
    }
    if (!mhx::is_zero(w)) throw InputError("coordinates: vector outside subspace");
    return coords;
}

}  // namespace mhx
