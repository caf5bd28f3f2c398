#pragma once

#include <vector>

#include "mhx/filtration.hpp"
#include "mhx/matrix.hpp"

namespace mhx {

/// An sl2-triple acting on V: [h, nminus] = -2 nminus, [h, nplus] = 2 nplus,
/// [nplus, nminus] = h, together with the weight-space decompositions of h
/// and of z = i(nminus - nplus). Construction validates the brackets and the
/// integrality/symmetry of the spectrum.
struct Sl2Rep {
    Matrix nminus, h, nplus;
    Grading weights_h;
    Grading weights_z;

    static Sl2Rep make(Matrix nminus, Matrix h, Matrix nplus);

    /// Multiplicity of the irreducible of highest weight d, from weight-space
    /// dimensions.
    std::vector<int> irreducible_content() const;
};

/// Eigenspace decomposition of a semisimple operator with integer spectrum
/// (|eigenvalue| <= ambient dimension). Throws InputError if the eigenspaces
/// do not exhaust the space.
Grading integer_eigenspaces(const Matrix& a);

/// Raising operator completing (n, h) to an sl2-triple: [h, x] = 2x and
/// [x, n] = h. The affine-linear system's kernel ambiguity is resolved by
/// the echelon-minimal solution, so the output is deterministic. Throws when
/// no completion exists.
Matrix sl2_complete(const Matrix& n, const Matrix& h);

/// The representation attached to split graded data: on each Gr^W_k the
/// limiting structure of the induced orbit determines H_k = Y - k and the
/// triple (N_k, H_k, N_k^+); the pieces are pulled back through E_k(yinf)
/// and summed. Requires every induced pair (F Gr_k, W(N_k)[-k]) to be a
/// split mixed Hodge structure with N_k a (-1,-1)-morphism.
Sl2Rep assemble_rho(const Matrix& n, const IncreasingFiltration& w,
                    const DecreasingFiltration& finf, const Grading& yinf);

/// sin(N)/N = sum_{j>=0} (-1)^j N^{2j} / (2j+1)!, exact for nilpotent N.
Matrix sinc_transform(const Matrix& n);

/// Whether the composite (project to b-weight space of z) o sin(N)/N o
/// (project to a-weight space of h) is nonzero.
bool sinc_weight_overlap(const Sl2Rep& rep, int a, int b);

/// The same quantity evaluated in the polynomial model of the irreducible of
/// highest weight d (monomials u^p v^{d-p}, n acting as v d/du, z-adapted
/// basis w^p wbar^{d-p}).
bool sinc_weight_overlap_oracle(int d, int a, int b);

/// The textbook characterization "nonzero iff a and b are both weights of
/// some irreducible summand d with a = d or a < |b|", taken at face value.
/// Exact evaluation disagrees with it at isolated middle-weight pairs
/// (b = 0 with (a+d)/2 odd), where an alternating-sign cancellation kills
/// the overlap; the oracle and the matrix predicate are authoritative.
bool sinc_weight_overlap_stated(const std::vector<int>& highest_weights, int a, int b);

/// The weight-zero Hodge frame on sl2: x^- = (h - i n_- - i n_+)/2,
/// x^+ = (h + i n_- + i n_+)/2, z = i(n_- - n_+), as 2x2 matrices.
struct Sl2HodgeFrame {
    Matrix nminus, h, nplus;
    Matrix xminus, xplus, z;
};
Sl2HodgeFrame sl2_hodge_frame();

}  // namespace mhx
