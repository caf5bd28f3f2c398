#include "mhx/filtration.hpp"

#include <algorithm>

#include "mhx/error.hpp"

namespace mhx {

// ---------------------------------------------------------------------------
// IncreasingFiltration

IncreasingFiltration::IncreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps)
    : ambient_(ambient), zero_(Subspace::zero(ambient)) {
    if (steps.empty()) throw InputError("increasing filtration needs at least one step");
    const Subspace* prev = &zero_;
    for (auto& [k, space] : steps) {
        if (space.ambient() != ambient_)
            throw InputError("filtration step ambient mismatch at index " + std::to_string(k));
        if (!space.contains(*prev))
            throw InputError("weight filtration not nested at index " + std::to_string(k));
        if (space != *prev) steps_.emplace(k, space);
        prev = &space;
    }
    if (steps_.empty() || !steps_.rbegin()->second.is_full())
        throw InputError("weight filtration does not exhaust the space");
}

IncreasingFiltration IncreasingFiltration::trivial(std::size_t ambient, int weight) {
    return IncreasingFiltration(ambient, {{weight, Subspace::full(ambient)}});
}

const Subspace& IncreasingFiltration::at(int k) const {
    auto it = steps_.upper_bound(k);
    if (it == steps_.begin()) return zero_;
    return std::prev(it)->second;
}

int IncreasingFiltration::lowest() const { return steps_.begin()->first; }
int IncreasingFiltration::highest() const { return steps_.rbegin()->first; }

IncreasingFiltration IncreasingFiltration::shift(int ell) const {
    std::map<int, Subspace> steps;
    for (const auto& [k, space] : steps_) steps.emplace(k - ell, space);
    return IncreasingFiltration(ambient_, std::move(steps));
}

IncreasingFiltration IncreasingFiltration::image_under(const Matrix& g) const {
    std::map<int, Subspace> steps;
    for (const auto& [k, space] : steps_) steps.emplace(k, space.image_under(g));
    return IncreasingFiltration(ambient_, std::move(steps));
}

IncreasingFiltration IncreasingFiltration::conjugate() const {
    std::map<int, Subspace> steps;
    for (const auto& [k, space] : steps_) steps.emplace(k, space.conjugate());
    return IncreasingFiltration(ambient_, std::move(steps));
}

bool IncreasingFiltration::is_real() const { return conjugate() == *this; }

// ---------------------------------------------------------------------------
// DecreasingFiltration

DecreasingFiltration::DecreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps)
    : ambient_(ambient), full_(Subspace::full(ambient)) {
    if (steps.empty()) throw InputError("decreasing filtration needs at least one step");
    const Subspace* prev = &full_;
    for (auto& [p, space] : steps) {
        if (space.ambient() != ambient_)
            throw InputError("filtration step ambient mismatch at index " + std::to_string(p));
        if (!prev->contains(space))
            throw InputError("hodge filtration not nested at index " + std::to_string(p));
        if (space != *prev) steps_.emplace(p, space);
        prev = &space;
    }
    if (steps_.empty() || !steps_.rbegin()->second.is_zero())
        throw InputError("hodge filtration does not terminate at zero");
}

DecreasingFiltration DecreasingFiltration::trivial(std::size_t ambient, int p) {
    return DecreasingFiltration(ambient, {{p + 1, Subspace::zero(ambient)}});
}

const Subspace& DecreasingFiltration::at(int p) const {
    auto it = steps_.upper_bound(p);
    if (it == steps_.begin()) return full_;
    return std::prev(it)->second;
}

int DecreasingFiltration::lowest() const { return steps_.begin()->first - 1; }
int DecreasingFiltration::highest() const { return steps_.rbegin()->first - 1; }

DecreasingFiltration DecreasingFiltration::image_under(const Matrix& g) const {
    std::map<int, Subspace> steps;
    for (const auto& [p, space] : steps_) steps.emplace(p, space.image_under(g));
    return DecreasingFiltration(ambient_, std::move(steps));
}

DecreasingFiltration DecreasingFiltration::conjugate() const {
    std::map<int, Subspace> steps;
    for (const auto& [p, space] : steps_) steps.emplace(p, space.conjugate());
    return DecreasingFiltration(ambient_, std::move(steps));
}

bool DecreasingFiltration::is_real() const { return conjugate() == *this; }

// ---------------------------------------------------------------------------
// Grading

Grading::Grading(std::size_t ambient, std::map<int, Subspace> eigenspaces)
    : ambient_(ambient), zero_(Subspace::zero(ambient)) {
    for (auto& [k, space] : eigenspaces) {
        if (space.ambient() != ambient_)
            throw InputError("grading eigenspace ambient mismatch at " + std::to_string(k));
        if (!space.is_zero()) spaces_.emplace(k, space);
    }
    std::size_t total = 0;
    for (const auto& [k, space] : spaces_) total += space.dim();
    if (total != ambient_)
        throw InputError("grading eigenspaces do not sum to the full space");
    basis_ = Matrix(ambient_, ambient_);
    col_weight_.resize(ambient_);
    std::size_t c = 0;
    for (const auto& [k, space] : spaces_)
        for (const Vec& v : space.basis()) {
            for (std::size_t i = 0; i < ambient_; ++i) basis_.at(i, c) = v[i];
            col_weight_[c] = k;
            ++c;
        }
    auto inv = inverse(basis_);
    if (!inv) throw InputError("grading eigenspaces are not independent");
    basis_inv_ = *inv;
}

Grading Grading::scalar(std::size_t ambient, int weight) {
    return Grading(ambient, {{weight, Subspace::full(ambient)}});
}

const Subspace& Grading::eigenspace(int k) const {
    auto it = spaces_.find(k);
    return it == spaces_.end() ? zero_ : it->second;
}

Matrix Grading::as_operator() const {
    Matrix d(ambient_, ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) d.at(c, c) = Scalar(col_weight_[c]);
    return basis_ * d * basis_inv_;
}

Matrix Grading::projector(int k) const {
    Matrix d(ambient_, ambient_);
    for (std::size_t c = 0; c < ambient_; ++c)
        if (col_weight_[c] == k) d.at(c, c) = Scalar(1);
    return basis_ * d * basis_inv_;
}

std::map<int, Matrix> Grading::decompose_ad(const Matrix& alpha) const {
    if (alpha.rows() != ambient_ || alpha.cols() != ambient_)
        throw InputError("decompose_ad dimension mismatch");
    const Matrix b = basis_inv_ * alpha * basis_;
    std::map<int, Matrix> blocks;
    for (std::size_t i = 0; i < ambient_; ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (b.at(i, j).is_zero()) continue;
            const int d = col_weight_[i] - col_weight_[j];
            auto it = blocks.find(d);
            if (it == blocks.end()) it = blocks.emplace(d, Matrix(ambient_, ambient_)).first;
            it->second.at(i, j) = b.at(i, j);
        }
    std::map<int, Matrix> comps;
    for (const auto& [d, blk] : blocks) {
        Matrix m = basis_ * blk * basis_inv_;
        if (!m.is_zero()) comps.emplace(d, std::move(m));
    }
    return comps;
}

Matrix Grading::ad_component(const Matrix& alpha, int d) const {
    auto comps = decompose_ad(alpha);
    auto it = comps.find(d);
    return it == comps.end() ? Matrix(ambient_, ambient_) : it->second;
}

Grading Grading::conjugated_by(const Matrix& g) const {
    std::map<int, Subspace> spaces;
    for (const auto& [k, space] : spaces_) spaces.emplace(k, space.image_under(g));
    return Grading(ambient_, std::move(spaces));
}

Grading Grading::shifted(int ell) const {
    std::map<int, Subspace> spaces;
    for (const auto& [k, space] : spaces_) spaces.emplace(k + ell, space);
    return Grading(ambient_, std::move(spaces));
}

bool Grading::is_real() const {
    return std::all_of(spaces_.begin(), spaces_.end(), [](const auto& e) {
        return e.second.conjugate() == e.second;
    });
}

// ---------------------------------------------------------------------------
// Graded pieces and induced data

IncreasingFiltration shift(const IncreasingFiltration& w, int ell) { return w.shift(ell); }

GradedPiece graded_piece(const IncreasingFiltration& w, int k, const std::optional<Grading>& y) {
    const std::size_t n = w.ambient();
    const Subspace& wk = w.at(k);
    const Subspace& wk1 = w.at(k - 1);
    Subspace reps;
    if (y) {
        if (!grades(*y, w)) throw InputError("supplied grading does not grade the filtration");
        reps = y->eigenspace(k);
    } else {
        reps = echelon_complement(wk1, wk);
    }
    // Full decomposition V = W_{k-1} + reps + (complement of W_k); the
    // projection reads off the reps block.
    const Subspace rest = echelon_complement(wk, Subspace::full(n));
    Matrix basis(n, n);
    std::size_t c = 0;
    auto add_cols = [&](const Subspace& s) {
        for (const Vec& v : s.basis()) {
            for (std::size_t i = 0; i < n; ++i) basis.at(i, c) = v[i];
            ++c;
        }
    };
    add_cols(wk1);
    const std::size_t first_rep = c;
    add_cols(reps);
    add_cols(rest);
    if (c != n) throw InternalError("graded piece decomposition does not fill the space");
    auto binv = inverse(basis);
    if (!binv) throw InternalError("graded piece decomposition is degenerate");

    GradedPiece piece;
    piece.weight = k;
    piece.representatives = reps;
    const std::size_t m = reps.dim();
    piece.section = Matrix(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) piece.section.at(i, j) = basis.at(i, first_rep + j);
    piece.projection = Matrix(m, n);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) piece.projection.at(j, i) = binv->at(first_rep + j, i);
    return piece;
}

DecreasingFiltration induce_on_graded(const DecreasingFiltration& f,
                                      const IncreasingFiltration& w, const GradedPiece& piece) {
    const Subspace& wk = w.at(piece.weight);
    std::map<int, Subspace> steps;
    for (const auto& entry : f.jumps()) {
        const int p = entry.first;
        const Subspace cut = f.at(p).intersect(wk);
        steps.emplace(p, cut.image_under(piece.projection));
    }
    return DecreasingFiltration(piece.dim(), std::move(steps));
}

DecreasingFiltration induce_on_graded(const DecreasingFiltration& f,
                                      const IncreasingFiltration& w, int k) {
    return induce_on_graded(f, w, graded_piece(w, k));
}

Matrix induce_operator(const Matrix& a, const IncreasingFiltration& w, const GradedPiece& piece) {
    if (!preserves(a, w)) throw InputError("operator does not preserve the filtration");
    return piece.projection * a * piece.section;
}

bool grades(const Grading& y, const IncreasingFiltration& w) {
    if (y.ambient() != w.ambient()) return false;
    return filtration_of(y) == w;
}

IncreasingFiltration filtration_of(const Grading& y) {
    std::map<int, Subspace> steps;
    Subspace acc = Subspace::zero(y.ambient());
    for (const auto& [k, space] : y.eigenspaces()) {
        acc = acc.sum(space);
        steps.emplace(k, acc);
    }
    return IncreasingFiltration(y.ambient(), std::move(steps));
}

bool lowers_filtration(const Matrix& a, const IncreasingFiltration& w, int r) {
    for (int k = w.lowest(); k <= w.highest(); ++k)
        if (!w.at(k - r).contains(w.at(k).image_under(a))) return false;
    return true;
}

bool lowers_filtration(const Matrix& a, const DecreasingFiltration& f, int r) {
    for (int p = f.lowest(); p <= f.highest(); ++p)
        if (!f.at(p - r).contains(f.at(p).image_under(a))) return false;
    return true;
}

bool preserves(const Matrix& a, const IncreasingFiltration& w) {
    return lowers_filtration(a, w, 0);
}

bool preserves(const Matrix& a, const DecreasingFiltration& f) {
    return lowers_filtration(a, f, 0);
}

}  // namespace mhx
