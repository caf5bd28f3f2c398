#include "mhx/float_backend.hpp"

#include <algorithm>
#include <cmath>

#include "mhx/error.hpp"

namespace mhx {
namespace fp {

double to_double(const Scalar& s) {
    const double re = s.re.get_d();
    const double im = s.im.get_d();
    return std::hypot(re, im);
}

FMat from_exact(const Matrix& m) {
    FMat r(m.rows(), FVec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = Cplx(m.at(i, j).re.get_d(), m.at(i, j).im.get_d());
    return r;
}

FVec from_exact_vec(const Vec& v) {
    FVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Cplx(v[i].re.get_d(), v[i].im.get_d());
    return r;
}

FMat fidentity(std::size_t n) {
    FMat r(n, FVec(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1.0;
    return r;
}

FMat fzero(std::size_t rows, std::size_t cols) { return FMat(rows, FVec(cols)); }

FMat fmul(const FMat& a, const FMat& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    FMat r(n, FVec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const Cplx ail = a[i][l];
            if (ail == Cplx(0.0)) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += ail * b[l][j];
        }
    return r;
}

FMat fadd(const FMat& a, const FMat& b) {
    FMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

FMat fscale(Cplx c, const FMat& a) {
    FMat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

FVec fapply(const FMat& m, const FVec& v) {
    FVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

FMat fconj(const FMat& m) {
    FMat r = m;
    for (auto& row : r)
        for (auto& x : row) x = std::conj(x);
    return r;
}

double max_abs(const FMat& m) {
    double mx = 0.0;
    for (const auto& row : m)
        for (const auto& x : row) mx = std::max(mx, std::abs(x));
    return mx;
}

FMat fexp_nilpotent(const FMat& a) {
    const std::size_t n = a.size();
    FMat acc = fidentity(n);
    FMat term = fidentity(n);
    double fact = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        term = fmul(term, a);
        fact *= static_cast<double>(k);
        acc = fadd(acc, fscale(1.0 / fact, term));
    }
    return acc;
}

FMat finverse(const FMat& a, Stats* stats) {
    const std::size_t n = a.size();
    FMat work = a;
    FMat inv = fidentity(n);
    double largest = 0.0;
    for (const auto& row : a)
        for (const auto& x : row) largest = std::max(largest, std::abs(x));
    const double tol = kRankTolerance * std::max(largest, 1.0);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(work[i][c]) > std::abs(work[sel][c])) sel = i;
        if (std::abs(work[sel][c]) <= tol) throw InputError("float inverse: singular matrix");
        if (stats && std::abs(work[sel][c]) <= 10 * tol) stats->ambiguous = true;
        std::swap(work[sel], work[c]);
        std::swap(inv[sel], inv[c]);
        const Cplx piv = work[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            work[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Cplx f = work[i][c];
            if (f == Cplx(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

namespace {

std::vector<std::size_t> frref(std::vector<FVec>& rows, Stats* stats) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    double largest = 0.0;
    for (const auto& row : rows)
        for (const auto& x : row) largest = std::max(largest, std::abs(x));
    const double tol = kRankTolerance * std::max(largest, 1e-300);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if (std::abs(rows[i][c]) > std::abs(rows[sel][c])) sel = i;
        const double mag = std::abs(rows[sel][c]);
        if (stats && mag > tol / 10 && mag < tol * 10) stats->ambiguous = true;
        if (mag <= tol) {
            for (std::size_t i = r; i < rows.size(); ++i) rows[i][c] = 0.0;
            continue;
        }
        std::swap(rows[r], rows[sel]);
        const Cplx piv = rows[r][c];
        for (std::size_t j = c; j < n; ++j) rows[r][j] /= piv;
        rows[r][c] = 1.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Cplx f = rows[i][c];
            if (f == Cplx(0.0)) continue;
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rows[i][c] = 0.0;
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

}  // namespace

FSubspace fspan(std::vector<FVec> rows, std::size_t ambient, Stats* stats) {
    FSubspace s;
    s.ambient = ambient;
    s.pivots = frref(rows, stats);
    s.basis = std::move(rows);
    return s;
}

FSubspace ffull(std::size_t ambient) {
    FSubspace s;
    s.ambient = ambient;
    for (std::size_t i = 0; i < ambient; ++i) {
        FVec e(ambient);
        e[i] = 1.0;
        s.basis.push_back(std::move(e));
        s.pivots.push_back(i);
    }
    return s;
}

FSubspace fsum(const FSubspace& a, const FSubspace& b, Stats* stats) {
    std::vector<FVec> rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return fspan(std::move(rows), a.ambient, stats);
}

FSubspace fintersect(const FSubspace& a, const FSubspace& b, Stats* stats) {
    const std::size_t n = a.ambient;
    std::vector<FVec> rows;
    for (const FVec& v : a.basis) {
        FVec r(2 * n);
        for (std::size_t j = 0; j < n; ++j) r[j] = r[n + j] = v[j];
        rows.push_back(std::move(r));
    }
    for (const FVec& v : b.basis) {
        FVec r(2 * n);
        for (std::size_t j = 0; j < n; ++j) r[j] = v[j];
        rows.push_back(std::move(r));
    }
    // Scale-aware zero test on the left half after reduction.
    double largest = 1e-300;
    for (const auto& row : rows)
        for (const auto& x : row) largest = std::max(largest, std::abs(x));
    frref(rows, stats);
    std::vector<FVec> inter;
    const double tol = kRankTolerance * largest;
    for (const FVec& r : rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = std::abs(r[j]) <= tol;
        if (left_zero) inter.emplace_back(r.begin() + static_cast<long>(n), r.end());
    }
    return fspan(std::move(inter), n, stats);
}

FSubspace fconj_space(const FSubspace& a, Stats* stats) {
    std::vector<FVec> rows;
    for (const FVec& v : a.basis) {
        FVec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = std::conj(v[i]);
        rows.push_back(std::move(r));
    }
    return fspan(std::move(rows), a.ambient, stats);
}

FSubspace fimage(const FSubspace& a, const FMat& g, Stats* stats) {
    std::vector<FVec> rows;
    for (const FVec& v : a.basis) rows.push_back(fapply(g, v));
    return fspan(std::move(rows), g.size(), stats);
}

FSubspace FDecreasing::at(int p) const {
    auto it = steps.upper_bound(p);
    if (it == steps.begin()) return ffull(ambient);
    return std::prev(it)->second;
}

FSubspace FIncreasing::at(int k) const {
    auto it = steps.upper_bound(k);
    if (it == steps.begin()) return FSubspace{ambient, {}, {}};
    return std::prev(it)->second;
}

FDecreasing from_exact(const DecreasingFiltration& f, Stats* stats) {
    FDecreasing r;
    r.ambient = f.ambient();
    for (const auto& [p, space] : f.jumps()) {
        std::vector<FVec> rows;
        for (const Vec& v : space.basis()) rows.push_back(from_exact_vec(v));
        r.steps.emplace(p, fspan(std::move(rows), f.ambient(), stats));
    }
    return r;
}

FIncreasing from_exact(const IncreasingFiltration& w, Stats* stats) {
    FIncreasing r;
    r.ambient = w.ambient();
    for (const auto& [k, space] : w.jumps()) {
        std::vector<FVec> rows;
        for (const Vec& v : space.basis()) rows.push_back(from_exact_vec(v));
        r.steps.emplace(k, fspan(std::move(rows), w.ambient(), stats));
    }
    return r;
}

FDecreasing fimage(const FDecreasing& f, const FMat& g, Stats* stats) {
    FDecreasing r;
    r.ambient = f.ambient;
    for (const auto& [p, space] : f.steps) r.steps.emplace(p, fimage(space, g, stats));
    return r;
}

bool fbigrading(const FDecreasing& f, const FIncreasing& w,
                std::map<std::pair<int, int>, FSubspace>* pieces, Stats* stats) {
    pieces->clear();
    const std::size_t n = f.ambient;
    if (f.steps.empty() || w.steps.empty()) return false;
    const int pmin = f.steps.begin()->first - 1;
    const int pmax = f.steps.rbegin()->first - 1;
    const int wlo = w.steps.begin()->first;
    const int whi = w.steps.rbegin()->first;
    FDecreasing fbar;
    fbar.ambient = n;
    for (const auto& [p, space] : f.steps) fbar.steps.emplace(p, fconj_space(space, stats));

    std::size_t total = 0;
    std::vector<FVec> all;
    for (int p = pmin; p <= pmax; ++p)
        for (int q = pmin; q <= pmax; ++q) {
            const int k = p + q;
            if (k < wlo || k > whi) continue;
            FSubspace second = fintersect(fbar.at(q), w.at(k), stats);
            for (int j = 1; k - j - 1 >= wlo; ++j)
                second = fsum(second, fintersect(fbar.at(q - j), w.at(k - j - 1), stats), stats);
            FSubspace piece = fintersect(fintersect(f.at(p), w.at(k), stats), second, stats);
            if (piece.dim() == 0) continue;
            total += piece.dim();
            for (const FVec& v : piece.basis) all.push_back(v);
            pieces->emplace(std::make_pair(p, q), std::move(piece));
        }
    if (total != n) return false;
    return fspan(std::move(all), n, stats).dim() == n;
}

FMat fgrading_operator(const std::map<std::pair<int, int>, FSubspace>& pieces, std::size_t n,
                       Stats* stats) {
    FMat basis(n, FVec(n));
    std::vector<double> weight(n, 0.0);
    std::size_t c = 0;
    for (const auto& [type, space] : pieces)
        for (const FVec& v : space.basis) {
            for (std::size_t i = 0; i < n; ++i) basis[i][c] = v[i];
            weight[c] = static_cast<double>(type.first + type.second);
            ++c;
        }
    if (c != n) throw InputError("float grading: pieces do not fill the space");
    FMat d = fzero(n, n);
    for (std::size_t i = 0; i < n; ++i) d[i][i] = weight[i];
    return fmul(fmul(basis, d), finverse(basis, stats));
}

}  // namespace fp
}  // namespace mhx
