#pragma once

#include <complex>
#include <map>
#include <vector>

#include "mhx/filtration.hpp"
#include "mhx/matrix.hpp"

// Approximate backend used only by the orbit lab's convergence sampling:
// binary floating point with rank decisions at a relative tolerance. The
// rest of the library is exact and never calls into this header.

namespace mhx {
namespace fp {

using Cplx = std::complex<double>;
using FVec = std::vector<Cplx>;
using FMat = std::vector<FVec>;  // row-major

inline constexpr double kRankTolerance = 1e-9;  // relative to the largest pivot

/// Accumulates rank-decision diagnostics across one sample's computation.
struct Stats {
    bool ambiguous = false;  // some entry fell into the tolerance band
};

FMat from_exact(const Matrix& m);
FVec from_exact_vec(const Vec& v);
double to_double(const Scalar& s);

FMat fidentity(std::size_t n);
FMat fzero(std::size_t rows, std::size_t cols);
FMat fmul(const FMat& a, const FMat& b);
FMat fadd(const FMat& a, const FMat& b);
FMat fscale(Cplx c, const FMat& a);
FVec fapply(const FMat& m, const FVec& v);
FMat fconj(const FMat& m);
double max_abs(const FMat& m);

/// exp of a (numerically) nilpotent matrix: series truncated at the
/// dimension.
FMat fexp_nilpotent(const FMat& a);

/// Inverse by Gauss elimination with partial pivoting.
FMat finverse(const FMat& a, Stats* stats);

/// Numeric subspace in reduced echelon form under the rank tolerance.
struct FSubspace {
    std::size_t ambient = 0;
    std::vector<FVec> basis;
    std::vector<std::size_t> pivots;
    std::size_t dim() const { return basis.size(); }
};

FSubspace fspan(std::vector<FVec> rows, std::size_t ambient, Stats* stats);
FSubspace ffull(std::size_t ambient);
FSubspace fsum(const FSubspace& a, const FSubspace& b, Stats* stats);
FSubspace fintersect(const FSubspace& a, const FSubspace& b, Stats* stats);
FSubspace fconj_space(const FSubspace& a, Stats* stats);
FSubspace fimage(const FSubspace& a, const FMat& g, Stats* stats);

/// Numeric filtrations as jump maps with the same clamping conventions as
/// the exact ones (below the first key: zero resp. full).
struct FDecreasing {
    std::size_t ambient = 0;
    std::map<int, FSubspace> steps;  // last value empty (zero)
    FSubspace at(int p) const;
};
struct FIncreasing {
    std::size_t ambient = 0;
    std::map<int, FSubspace> steps;  // last value full
    FSubspace at(int k) const;
};

FDecreasing from_exact(const DecreasingFiltration& f, Stats* stats);
FIncreasing from_exact(const IncreasingFiltration& w, Stats* stats);
FDecreasing fimage(const FDecreasing& f, const FMat& g, Stats* stats);

/// Numeric Deligne bigrading by the standard intersection formula; returns
/// false when the candidate pieces fail to decompose the space at the
/// working tolerance.
bool fbigrading(const FDecreasing& f, const FIncreasing& w,
                std::map<std::pair<int, int>, FSubspace>* pieces, Stats* stats);

/// Grading operator with eigenvalue p+q on each piece.
FMat fgrading_operator(const std::map<std::pair<int, int>, FSubspace>& pieces, std::size_t n,
                       Stats* stats);

}  // namespace fp
}  // namespace mhx
