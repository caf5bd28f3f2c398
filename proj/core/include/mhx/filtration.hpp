#pragma once

#include <map>
#include <optional>

#include "mhx/matrix.hpp"
#include "mhx/subspace.hpp"

namespace mhx {

/// Increasing filtration 0 <= ... <= W_k <= W_{k+1} <= ... <= V, stored on
/// its jump window. Queries clamp: below the window every step is 0, above
/// it the full space. The stored top step must be the full space.
class IncreasingFiltration {
public:
    IncreasingFiltration() : ambient_(0) {}
    IncreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps);

    static IncreasingFiltration trivial(std::size_t ambient, int weight);

    std::size_t ambient() const { return ambient_; }
    const Subspace& at(int k) const;
    /// Jump indices only: k with W_k != W_{k-1}.
    const std::map<int, Subspace>& jumps() const { return steps_; }
    int lowest() const;   // smallest k with W_k != 0
    int highest() const;  // smallest k with W_k = V

    IncreasingFiltration shift(int ell) const;
    IncreasingFiltration image_under(const Matrix& g) const;  // g invertible
    IncreasingFiltration conjugate() const;
    bool is_real() const;

    friend bool operator==(const IncreasingFiltration& a, const IncreasingFiltration& b) {
        return a.ambient_ == b.ambient_ && a.steps_ == b.steps_;
    }
    friend bool operator!=(const IncreasingFiltration& a, const IncreasingFiltration& b) {
        return !(a == b);
    }

private:
    std::size_t ambient_;
    std::map<int, Subspace> steps_;
    Subspace zero_;
};

/// Decreasing filtration V >= ... >= F^p >= F^{p+1} >= ... >= 0, stored on
/// its jump window; below the window every step is the full space. The
/// stored bottom step must be the zero subspace.
class DecreasingFiltration {
public:
    DecreasingFiltration() : ambient_(0) {}
    DecreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps);

    static DecreasingFiltration trivial(std::size_t ambient, int p);

    std::size_t ambient() const { return ambient_; }
    const Subspace& at(int p) const;
    const std::map<int, Subspace>& jumps() const { return steps_; }
    int lowest() const;   // largest p with F^p = V
    int highest() const;  // largest p with F^p != 0

    DecreasingFiltration image_under(const Matrix& g) const;
    DecreasingFiltration conjugate() const;
    bool is_real() const;

    friend bool operator==(const DecreasingFiltration& a, const DecreasingFiltration& b) {
        return a.ambient_ == b.ambient_ && a.steps_ == b.steps_;
    }
    friend bool operator!=(const DecreasingFiltration& a, const DecreasingFiltration& b) {
        return !(a == b);
    }

private:
    std::size_t ambient_;
    std::map<int, Subspace> steps_;
    Subspace full_;
};

/// Z-grading of V, identified with the semisimple endomorphism that acts on
/// E_k by k. Stored as the eigenvalue -> eigenspace map; construction
/// validates that the eigenspaces are independent and exhaust V.
class Grading {
public:
    Grading() : ambient_(0) {}
    Grading(std::size_t ambient, std::map<int, Subspace> eigenspaces);

    static Grading scalar(std::size_t ambient, int weight);

    std::size_t ambient() const { return ambient_; }
    const std::map<int, Subspace>& eigenspaces() const { return spaces_; }
    const Subspace& eigenspace(int k) const;

    Matrix as_operator() const;
    /// Projection of V onto E_k along the other eigenspaces.
    Matrix projector(int k) const;

    /// Components of alpha by ad-eigenvalue: alpha = sum_d comp[d] with
    /// comp[d] mapping E_a into E_{a+d}. Zero components are omitted.
    std::map<int, Matrix> decompose_ad(const Matrix& alpha) const;
    Matrix ad_component(const Matrix& alpha, int d) const;

    Grading conjugated_by(const Matrix& g) const;  // eigenspaces g.E_k
    Grading shifted(int ell) const;                // eigenvalues k -> k + ell
    bool is_real() const;

    friend bool operator==(const Grading& a, const Grading& b) {
        return a.ambient_ == b.ambient_ && a.spaces_ == b.spaces_;
    }
    friend bool operator!=(const Grading& a, const Grading& b) { return !(a == b); }

private:
    std::size_t ambient_;
    std::map<int, Subspace> spaces_;
    Matrix basis_;      // columns: concatenated eigenbases
    Matrix basis_inv_;
    std::vector<int> col_weight_;
    Subspace zero_;
};

/// Gr^W_k realized inside V: an explicit complement of W_{k-1} in W_k with
/// the section (coordinates -> V) and projection (V -> coordinates) maps.
struct GradedPiece {
    int weight = 0;
    Subspace representatives;
    Matrix section;     // ambient x dim, columns = representative basis
    Matrix projection;  // dim x ambient, kills W_{k-1} and any fixed complement of W_k
    std::size_t dim() const { return representatives.dim(); }
};

IncreasingFiltration shift(const IncreasingFiltration& w, int ell);

/// Complement of W_{k-1} in W_k; E_k(Y) when a grading of W is supplied.
GradedPiece graded_piece(const IncreasingFiltration& w, int k,
                         const std::optional<Grading>& y = std::nullopt);

/// Filtration induced by F on a graded piece, in the piece's coordinates:
/// p -> image of F^p cap W_k.
DecreasingFiltration induce_on_graded(const DecreasingFiltration& f,
                                      const IncreasingFiltration& w,
                                      const GradedPiece& piece);
DecreasingFiltration induce_on_graded(const DecreasingFiltration& f,
                                      const IncreasingFiltration& w, int k);

/// Matrix of the endomorphism induced by a on a graded piece (a must
/// preserve W).
Matrix induce_operator(const Matrix& a, const IncreasingFiltration& w,
                       const GradedPiece& piece);

bool grades(const Grading& y, const IncreasingFiltration& w);
IncreasingFiltration filtration_of(const Grading& y);

/// a(W_k) <= W_{k-r} for all k.
bool lowers_filtration(const Matrix& a, const IncreasingFiltration& w, int r);
/// a(F^p) <= F^{p-r} for all p.
bool lowers_filtration(const Matrix& a, const DecreasingFiltration& f, int r);
bool preserves(const Matrix& a, const IncreasingFiltration& w);
bool preserves(const Matrix& a, const DecreasingFiltration& f);

}  // namespace mhx
