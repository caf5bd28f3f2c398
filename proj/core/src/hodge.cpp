#include "mhx/hodge.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace mhx {

namespace {

std::string pq(int p, int q) {
    std::ostringstream os;
    os << "(" << p << "," << q << ")";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// GlBigrading

GlBigrading::GlBigrading(const MixedHodgeStructure& mhs) : n_(mhs.dim()) {
    basis_ = Matrix(n_, n_);
    col_type_.resize(n_);
    std::size_t c = 0;
    for (const auto& [type, space] : mhs.pieces())
        for (const Vec& v : space.basis()) {
            for (std::size_t i = 0; i < n_; ++i) basis_.at(i, c) = v[i];
            col_type_[c] = type;
            ++c;
        }
    auto inv = inverse(basis_);
    if (!inv) throw InternalError("bigrading basis is singular");
    basis_inv_ = *inv;
}

GlBigrading::Part GlBigrading::classify(int r, int s) {
    if (r >= 0 && s < 0) return Part::EtaPlus;
    if (r < 0 && s >= 0) return Part::EtaMinus;
    if (r < 0 && s < 0) return Part::Lambda;
    return Part::EtaZero;
}

std::map<std::pair<int, int>, Matrix> GlBigrading::decompose(const Matrix& a) const {
    if (a.rows() != n_ || a.cols() != n_) throw InputError("decompose dimension mismatch");
    const Matrix b = basis_inv_ * a * basis_;
    std::map<std::pair<int, int>, Matrix> blocks;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (b.at(i, j).is_zero()) continue;
            const std::pair<int, int> rs{col_type_[i].first - col_type_[j].first,
                                         col_type_[i].second - col_type_[j].second};
            auto it = blocks.find(rs);
            if (it == blocks.end()) it = blocks.emplace(rs, Matrix(n_, n_)).first;
            it->second.at(i, j) = b.at(i, j);
        }
    std::map<std::pair<int, int>, Matrix> comps;
    for (const auto& [rs, blk] : blocks) comps.emplace(rs, basis_ * blk * basis_inv_);
    return comps;
}

Matrix GlBigrading::component(const Matrix& a, int r, int s) const {
    auto comps = decompose(a);
    auto it = comps.find({r, s});
    return it == comps.end() ? Matrix(n_, n_) : it->second;
}

Matrix GlBigrading::project(const Matrix& a, Part part) const {
    Matrix acc(n_, n_);
    for (const auto& [rs, comp] : decompose(a))
        if (classify(rs.first, rs.second) == part) acc += comp;
    return acc;
}

bool GlBigrading::in_part(const Matrix& a, Part part) const {
    for (const auto& [rs, comp] : decompose(a))
        if (classify(rs.first, rs.second) != part && !comp.is_zero()) return false;
    return true;
}

Subspace GlBigrading::component_space(int r, int s) const {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (col_type_[i].first - col_type_[j].first != r ||
                col_type_[i].second - col_type_[j].second != s)
                continue;
            // basis * E_ij * basis_inv = (col i of basis) (row j of basis_inv)
            Matrix m(n_, n_);
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = 0; y < n_; ++y)
                    m.at(x, y) = basis_.at(x, i) * basis_inv_.at(j, y);
            gens.push_back(m.vectorize());
        }
    return Subspace::span(gens, n_ * n_);
}

Subspace GlBigrading::part_space(Part part) const {
    std::vector<Vec> gens;
    for (const auto& rs : occurring_types()) {
        if (classify(rs.first, rs.second) != part) continue;
        const Subspace comp = component_space(rs.first, rs.second);
        for (const Vec& v : comp.basis()) gens.push_back(v);
    }
    return Subspace::span(gens, n_ * n_);
}

std::vector<std::pair<int, int>> GlBigrading::occurring_types() const {
    std::vector<std::pair<int, int>> types;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::pair<int, int> rs{col_type_[i].first - col_type_[j].first,
                                   col_type_[i].second - col_type_[j].second};
            if (std::find(types.begin(), types.end(), rs) == types.end()) types.push_back(rs);
        }
    return types;
}

// ---------------------------------------------------------------------------
// MixedHodgeStructure

std::optional<MixedHodgeStructure> MixedHodgeStructure::try_build(const DecreasingFiltration& f,
                                                                  const IncreasingFiltration& w,
                                                                  std::string* witness) {
    auto fail = [&](const std::string& why) -> std::optional<MixedHodgeStructure> {
        if (witness) *witness = why;
        return std::nullopt;
    };
    if (f.ambient() != w.ambient()) return fail("filtration ambient dimensions differ");
    const std::size_t n = f.ambient();

    // Candidate pieces from the standard intersection formula
    //   I^{p,q} = F^p cap W_{p+q} cap
    //             ( conj(F^q) cap W_{p+q} + sum_{j>=1} conj(F^{q-j}) cap W_{p+q-j-1} ).
    // Uniqueness of the bigrading makes the verification below authoritative.
    const DecreasingFiltration fbar = f.conjugate();
    const int pmin = f.lowest(), pmax = f.highest();
    std::map<std::pair<int, int>, Subspace> pieces;
    for (int p = pmin; p <= pmax; ++p)
        for (int q = pmin; q <= pmax; ++q) {
            const int k = p + q;
            if (k < w.lowest() || k > w.highest()) continue;
            Subspace second = fbar.at(q).intersect(w.at(k));
            for (int j = 1; k - j - 1 >= w.lowest(); ++j)
                second = second.sum(fbar.at(q - j).intersect(w.at(k - j - 1)));
            Subspace piece = f.at(p).intersect(w.at(k)).intersect(second);
            if (!piece.is_zero()) pieces.emplace(std::make_pair(p, q), std::move(piece));
        }

    // Axiom 1: the pieces are independent and exhaust V.
    std::vector<Vec> all;
    std::size_t total = 0;
    for (const auto& [type, space] : pieces) {
        total += space.dim();
        for (const Vec& v : space.basis()) all.push_back(v);
    }
    if (total != n || Subspace::span(all, n).dim() != n)
        return fail("candidate pieces do not decompose the space");

    // Axiom 2: F^p = sum_{a>=p} I^{a,b} for every p.
    for (int p = pmin; p <= pmax + 1; ++p) {
        Subspace acc = Subspace::zero(n);
        for (const auto& [type, space] : pieces)
            if (type.first >= p) acc = acc.sum(space);
        if (acc != f.at(p))
            return fail("Hodge filtration is not recovered at p=" + std::to_string(p));
    }

    // Axiom 3: W_k = sum_{a+b<=k} I^{a,b} for every k.
    for (int k = w.lowest() - 1; k <= w.highest(); ++k) {
        Subspace acc = Subspace::zero(n);
        for (const auto& [type, space] : pieces)
            if (type.first + type.second <= k) acc = acc.sum(space);
        if (acc != w.at(k))
            return fail("weight filtration is not recovered at k=" + std::to_string(k));
    }

    // Axiom 4: conj(I^{p,q}) = I^{q,p} modulo sum_{r<q,s<p} I^{r,s}.
    for (const auto& [type, space] : pieces) {
        const auto [p, q] = type;
        Subspace target = Subspace::zero(n);
        auto it = pieces.find({q, p});
        if (it != pieces.end()) target = it->second;
        for (const auto& [type2, space2] : pieces)
            if (type2.first < q && type2.second < p) target = target.sum(space2);
        if (!target.contains(space.conjugate()))
            return fail("conjugation congruence fails at " + pq(p, q));
    }

    MixedHodgeStructure mhs;
    mhs.f_ = f;
    mhs.w_ = w;
    mhs.pieces_ = std::move(pieces);
    mhs.zero_ = Subspace::zero(n);
    std::map<int, Subspace> eigen;
    for (const auto& [type, space] : mhs.pieces_) {
        const int k = type.first + type.second;
        auto it = eigen.find(k);
        if (it == eigen.end())
            eigen.emplace(k, space);
        else
            it->second = it->second.sum(space);
    }
    mhs.y_ = Grading(n, std::move(eigen));
    mhs.gl_ = std::make_shared<const GlBigrading>(mhs);
    return mhs;
}

MixedHodgeStructure MixedHodgeStructure::build(const DecreasingFiltration& f,
                                               const IncreasingFiltration& w) {
    std::string witness;
    auto mhs = try_build(f, w, &witness);
    if (!mhs) throw NotMixedHodgeError(witness);
    return *mhs;
}

const Subspace& MixedHodgeStructure::piece(int p, int q) const {
    auto it = pieces_.find({p, q});
    return it == pieces_.end() ? zero_ : it->second;
}

std::map<std::pair<int, int>, std::size_t> MixedHodgeStructure::hodge_numbers() const {
    std::map<std::pair<int, int>, std::size_t> h;
    for (const auto& [type, space] : pieces_) h.emplace(type, space.dim());
    return h;
}

bool MixedHodgeStructure::is_split_real() const {
    for (const auto& [type, space] : pieces_)
        if (space.conjugate() != piece(type.second, type.first)) return false;
    return true;
}

bool is_split_real(const MixedHodgeStructure& mhs) { return mhs.is_split_real(); }

Matrix project(const Matrix& a, const MixedHodgeStructure& mhs, GlBigrading::Part part) {
    return mhs.gl().project(a, part);
}

bool morphism_type(const Matrix& a, const MixedHodgeStructure& mhs, int r, int s) {
    for (const auto& [type, space] : mhs.pieces()) {
        const Subspace target = mhs.piece(type.first + r, type.second + s);
        if (!target.contains(space.image_under(a))) return false;
    }
    return true;
}

}  // namespace mhx
