#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhx/hodge.hpp"
#include "mhx/weight_filtration.hpp"

namespace mhx {

/// Output of the grading construction for (N, relY, W): the unique grading Y
/// of W with (1) [relY, Y] = 0, (2) no degree -1 component of N, and
/// (3) (ad N_0)^{k-1} N_{-k} = 0 for every k > 0. The certificate booleans
/// re-check the three conditions on the returned data.
struct DeligneGradingResult {
    Grading y;
    std::map<int, Matrix> components;  // k -> N_{-k} (ad-Y degree -k)
    bool cond_commutes = false;
    bool cond_no_degree_one = false;
    bool cond_primitive = false;
    bool certificate() const { return cond_commutes && cond_no_degree_one && cond_primitive; }
};

/// A grading of W commuting with relY, built from echelon complements inside
/// the relY eigenspaces. Used as the default starting point of the
/// inductive correction.
Grading initial_commuting_grading(const Grading& rel_y, const IncreasingFiltration& w);

/// Deligne's grading of W attached to (N, relY, W). Preconditions (checked):
/// N nilpotent preserving W, [relY, N] = -2N, relY preserves W, and
/// filtration_of(relY) is the relative weight filtration of (N, W). The
/// construction corrects an initial grading degree by degree, each stage one
/// affine-linear solve; the result is certificate-verified before return.
DeligneGradingResult deligne_grading(const Matrix& n, const Grading& rel_y,
                                     const IncreasingFiltration& w);
DeligneGradingResult deligne_grading(const Matrix& n, const Grading& rel_y,
                                     const IncreasingFiltration& w, const Grading& y0);

/// Verdicts for the admissible-triple conditions on (F, W, N).
struct TripleCheck {
    bool rel_weight_exists = false;
    bool is_mhs_pair = false;
    bool n_is_minus1_minus1 = false;
    bool w_by_sub_mhs = false;
    std::string witness;
    std::optional<IncreasingFiltration> rel_w;
    std::optional<MixedHodgeStructure> limit_mhs;  // (F, rel W)
    bool admissible() const {
        return rel_weight_exists && is_mhs_pair && n_is_minus1_minus1 && w_by_sub_mhs;
    }
};
TripleCheck check_triple(const DecreasingFiltration& f, const IncreasingFiltration& w,
                         const Matrix& n);

/// Y(F, W, N): deligne_grading with relY the grading of the mixed Hodge
/// structure (F, rel W). Throws InputError naming the violated clause when
/// the triple is not admissible. Asserts that the result preserves F, and
/// that it is real whenever (F, rel W) is split.
Grading y_of_triple(const DecreasingFiltration& f, const IncreasingFiltration& w,
                    const Matrix& n);

/// The two sides of Y_{(e^{iyN}.F, W)} = e^{iyN} . Y(F,W,N): the left
/// computed from scratch from the flowed pair, the right by transporting
/// y_of_triple. Requires (F, rel W) split; throws if the flowed pair is not
/// a mixed Hodge structure at the given y > 0.
struct FlowGradingPair {
    Grading lhs, rhs;
    bool equal = false;
};
FlowGradingPair flowed_grading_pair(const DecreasingFiltration& f, const IncreasingFiltration& w,
                                    const Matrix& n, const Rational& y);

/// Input data for the functoriality checks.
struct GradingInstance {
    Matrix n;
    Grading rel_y;
    IncreasingFiltration w;
};

GradingInstance direct_sum_instance(const GradingInstance& a, const GradingInstance& b);
GradingInstance dual_instance(const GradingInstance& a);
GradingInstance tensor_instance(const GradingInstance& a, const GradingInstance& b);

enum class FunctorOp { DirectSum, Dual, Tensor };

/// Whether the grading of the combined instance equals the canonical
/// combination of the component gradings (block sum; negative transpose on
/// the dual; Leibniz sum on the tensor).
bool functoriality_check(const std::vector<GradingInstance>& instances, FunctorOp op);

}  // namespace mhx
