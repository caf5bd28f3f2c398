#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mhx/matrix.hpp"
#include "mhx/scalar.hpp"

namespace mhx {

/// Subspace of C^n (C = Gaussian rationals) stored as a reduced-echelon
/// basis: rows are pivot-normalized, pivot columns are cleared above and
/// below, and rows are sorted by pivot. The representation is canonical, so
/// equality of subspaces is equality of representations.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace line(const Vec& v);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return dim() == ambient_; }

    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace conjugate() const;

    /// Image under a linear map (cols of m must match ambient).
    Subspace image_under(const Matrix& m) const;
    /// Preimage under a linear map: { v : m v in this }.
    Subspace preimage_under(const Matrix& m) const;

    /// Rows spanning { f : f(v) = 0 for all v in this } (plain transpose
    /// pairing, no conjugation). Empty matrix with 0 rows when full.
    Matrix annihilator() const;

    /// Basis as rows of a dim x ambient matrix.
    Matrix basis_matrix() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

enum class CombineMode { Sum, Intersect };

/// span of the union / largest common subspace. Throws on ambient mismatch.
Subspace combine(const Subspace& a, const Subspace& b, CombineMode mode);

Subspace conjugate_subspace(const Subspace& a);

/// Reduced-echelon span of arbitrary generating vectors.
Subspace rref_basis(const std::vector<Vec>& vectors, std::size_t ambient);

/// In-place reduced row echelon form; returns the pivot columns. Zero rows
/// are dropped.
std::vector<std::size_t> rref(std::vector<Vec>& rows);

/// Nullspace { x : a x = 0 } as a subspace of the column coordinate space.
Subspace kernel(const Matrix& a);

/// Column space of a.
Subspace image(const Matrix& a);

std::size_t rank(const Matrix& a);

/// One solution of a x = b, if any.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(const Matrix& a);

/// For nested subspaces inner <= outer, the canonical complement of inner
/// inside outer spanned by the outer echelon rows whose pivots are not
/// pivots of inner. Throws InputError if inner is not contained in outer.
Subspace echelon_complement(const Subspace& inner, const Subspace& outer);

/// Coordinates of v in the row basis of s (v must lie in s).
Vec coordinates(const Subspace& s, const Vec& v);

}  // namespace mhx
