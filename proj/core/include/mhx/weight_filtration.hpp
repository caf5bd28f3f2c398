#pragma once

#include <optional>
#include <string>

#include "mhx/filtration.hpp"
#include "mhx/matrix.hpp"

namespace mhx {

/// Monodromy weight filtration W(N) of a nilpotent endomorphism, centered
/// at 0: the unique increasing filtration with N: W_l -> W_{l-2} and
/// N^l: Gr_l -> Gr_{-l} an isomorphism. Both properties are re-verified on
/// the result before it is returned.
IncreasingFiltration monodromy_weight(const Matrix& n);

/// Outcome of a relative weight filtration computation. `exists` holds iff
/// `filtration` is present, and a present filtration always passes
/// verify_rel.
struct RelWeightResult {
    bool exists = false;
    std::optional<IncreasingFiltration> filtration;
    std::string failure_witness;
};

/// Relative weight filtration of (N, W): the unique increasing filtration M
/// with (i) N: M_k -> M_{k-2} and (ii) M inducing the k-shifted monodromy
/// weight filtration of the induced map on every Gr^W_k. May not exist; the
/// result then carries a witness naming the first level where the defining
/// constraints become infeasible.
RelWeightResult relative_weight(const Matrix& n, const IncreasingFiltration& w);

/// Exact check of conditions (i) and (ii) above for a candidate m.
bool verify_rel(const Matrix& n, const IncreasingFiltration& w, const IncreasingFiltration& m);
bool verify_rel(const Matrix& n, const IncreasingFiltration& w, const IncreasingFiltration& m,
                std::string* witness);

/// Increasing analogue of induce_on_graded: k -> image of M_k cap W_k in
/// the piece coordinates.
IncreasingFiltration induce_increasing_on_graded(const IncreasingFiltration& m,
                                                 const IncreasingFiltration& w,
                                                 const GradedPiece& piece);

}  // namespace mhx
