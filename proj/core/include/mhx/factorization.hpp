#pragma once

#include <array>

#include "mhx/hodge.hpp"

namespace mhx {

/// exp(alpha) = exp(gamma) exp(lambda) exp(phi) with gamma real and
/// W-lowering, lambda in Lambda^{-1,-1}, phi F-preserving and W-lowering.
/// All three memberships and the exact product identity are verified before
/// the result is returned.
struct FactorizationResult {
    Matrix gamma, lambda, phi;
    int iterations = 0;       // correction stages run, counting the seed stage
    int residual_degree = 0;  // r with the final residual certified in Lie_{-r} = 0
};

/// Three-factor decomposition of exp(alpha) for alpha strictly lowering W,
/// by the first-order seed plus degree-by-degree corrections; the residual
/// at stage k is the exact unipotent logarithm of the current product
/// against exp(alpha) and must lie in Lie_{-(k+1)}. The weight filtration
/// must be real (the gamma factor is a real matrix).
FactorizationResult exp_triple_factorization(const Matrix& alpha, const MixedHodgeStructure& mhs);

/// Differences of the three factors against their first-order values
/// gamma_1 = pi_-(a) + conj(pi_-(a)), lambda_1 = pi_L(a) - pi_L(conj(pi_-(a))),
/// phi_1 = pi_+(a) - pi_+(conj(pi_-(a))); each certified to lie in Lie_{-2}.
std::array<Matrix, 3> first_order_defect(const FactorizationResult& result, const Matrix& alpha,
                                         const MixedHodgeStructure& mhs);

/// Action of g = exp(lambda), lambda in Lambda^{-1,-1}, on a mixed Hodge
/// structure: the bigrading of (g.F, W) is the pointwise g-image of the
/// input bigrading. Computed both ways and compared before returning.
MixedHodgeStructure lambda_action(const Matrix& g, const MixedHodgeStructure& mhs);

}  // namespace mhx
