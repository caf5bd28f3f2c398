#include "mhx/factorization.hpp"

#include "mhx/nilpotent.hpp"

namespace mhx {

namespace {

using Part = GlBigrading::Part;

struct Seed {
    Matrix gamma, lambda, phi;
};

Seed seed_for(const Matrix& a, const GlBigrading& gl) {
    const Matrix minus = gl.project(a, Part::EtaMinus);
    const Matrix minus_bar = minus.conj();
    Seed s{minus + minus_bar,
           gl.project(a, Part::Lambda) - gl.project(minus_bar, Part::Lambda),
           gl.project(a, Part::EtaPlus) - gl.project(minus_bar, Part::EtaPlus)};
    return s;
}

}  // namespace

FactorizationResult exp_triple_factorization(const Matrix& alpha, const MixedHodgeStructure& mhs) {
    const auto& w = mhs.weight_filtration();
    if (alpha.rows() != mhs.dim() || !alpha.is_square())
        throw InputError("exp_triple_factorization: dimension mismatch");
    if (!lowers_filtration(alpha, w, 1))
        throw InputError("exp_triple_factorization: alpha does not strictly lower W");
    if (!w.is_real())
        throw InputError("exp_triple_factorization: weight filtration must be real");

    const GlBigrading& gl = mhs.gl();
    const Seed s = seed_for(alpha, gl);
    Matrix gamma = s.gamma, lambda = s.lambda, phi = s.phi;
    const Matrix target = exp_nilpotent(alpha);
    const int width = w.highest() - w.lowest();

    FactorizationResult result;
    for (int k = 1;; ++k) {
        const Matrix product = exp_nilpotent(gamma) * exp_nilpotent(lambda) * exp_nilpotent(phi);
        const Matrix beta = log_unipotent(product) - alpha;
        result.iterations = k;
        if (beta.is_zero()) {
            result.residual_degree = k + 1;
            break;
        }
        if (k > width + 1)
            throw InternalError("exp_triple_factorization: failed to terminate");
        if (!lowers_filtration(beta, w, k + 1))
            throw InternalError("exp_triple_factorization: residual escapes Lie_{-" +
                                std::to_string(k + 1) + "}");
        const Matrix bm = gl.project(beta, Part::EtaMinus);
        const Matrix bm_bar = bm.conj();
        gamma += -bm - bm_bar;
        lambda += -gl.project(beta, Part::Lambda) + gl.project(bm_bar, Part::Lambda);
        phi += -gl.project(beta, Part::EtaPlus) + gl.project(bm_bar, Part::EtaPlus);
    }

    if (exp_nilpotent(gamma) * exp_nilpotent(lambda) * exp_nilpotent(phi) != target)
        throw InternalError("exp_triple_factorization: product identity failed");
    if (!gamma.is_real() || !lowers_filtration(gamma, w, 1))
        throw InternalError("exp_triple_factorization: gamma is not a real W-lowering factor");
    if (!gl.in_part(lambda, Part::Lambda))
        throw InternalError("exp_triple_factorization: lambda escapes Lambda^{-1,-1}");
    if (!preserves(phi, mhs.hodge_filtration()) || !lowers_filtration(phi, w, 1))
        throw InternalError("exp_triple_factorization: phi is not F-preserving and W-lowering");
    result.gamma = std::move(gamma);
    result.lambda = std::move(lambda);
    result.phi = std::move(phi);
    return result;
}

std::array<Matrix, 3> first_order_defect(const FactorizationResult& result, const Matrix& alpha,
                                         const MixedHodgeStructure& mhs) {
    const Seed s = seed_for(alpha, mhs.gl());
    std::array<Matrix, 3> defects{result.gamma - s.gamma, result.lambda - s.lambda,
                                  result.phi - s.phi};
    for (const Matrix& d : defects)
        if (!lowers_filtration(d, mhs.weight_filtration(), 2))
            throw InternalError("first_order_defect: defect escapes Lie_{-2}");
    return defects;
}

MixedHodgeStructure lambda_action(const Matrix& g, const MixedHodgeStructure& mhs) {
    if (g.rows() != mhs.dim() || !g.is_square()) throw InputError("lambda_action: bad dimension");
    const Matrix log = log_unipotent(g);  // throws InputError when g is not unipotent
    if (!mhs.gl().in_part(log, GlBigrading::Part::Lambda))
        throw InputError("lambda_action: log(g) is not in Lambda^{-1,-1}");
    MixedHodgeStructure moved = MixedHodgeStructure::build(
        mhs.hodge_filtration().image_under(g), mhs.weight_filtration());
    for (const auto& [type, space] : mhs.pieces())
        if (moved.piece(type.first, type.second) != space.image_under(g))
            throw InternalError("lambda_action: transported bigrading disagrees with rebuild");
    if (moved.pieces().size() != mhs.pieces().size())
        throw InternalError("lambda_action: transported bigrading disagrees with rebuild");
    return moved;
}

}  // namespace mhx
