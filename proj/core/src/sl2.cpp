#include "mhx/sl2.hpp"

#include <algorithm>

#include "mhx/error.hpp"
#include "mhx/hodge.hpp"
#include "mhx/nilpotent.hpp"
#include "mhx/weight_filtration.hpp"

namespace mhx {

Grading integer_eigenspaces(const Matrix& a) {
    if (!a.is_square()) throw InputError("eigenspace decomposition of non-square matrix");
    const long n = static_cast<long>(a.rows());
    std::map<int, Subspace> spaces;
    std::size_t total = 0;
    for (long k = -n; k <= n && total < a.rows(); ++k) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            shifted.at(i, i) -= Scalar(Rational(k));
        Subspace ker = kernel(shifted);
        if (!ker.is_zero()) {
            total += ker.dim();
            spaces.emplace(static_cast<int>(k), std::move(ker));
        }
    }
    if (total != a.rows())
        throw InputError("operator is not semisimple with integer spectrum");
    return Grading(a.rows(), std::move(spaces));
}

Sl2Rep Sl2Rep::make(Matrix nminus, Matrix h, Matrix nplus) {
    if (bracket(h, nminus) != Scalar(-2) * nminus ||
        bracket(h, nplus) != Scalar(2) * nplus || bracket(nplus, nminus) != h)
        throw InputError("matrices do not satisfy the sl2 bracket relations");
    Sl2Rep rep;
    rep.weights_h = integer_eigenspaces(h);
    Matrix z = Scalar::i() * (nminus - nplus);
    rep.weights_z = integer_eigenspaces(z);
    const auto& spaces = rep.weights_h.eigenspaces();
    for (const auto& [k, space] : spaces) {
        auto it = spaces.find(-k);
        if (it == spaces.end() || it->second.dim() != space.dim())
            throw InputError("sl2 weight spectrum is not symmetric about 0");
    }
    rep.nminus = std::move(nminus);
    rep.h = std::move(h);
    rep.nplus = std::move(nplus);
    return rep;
}

std::vector<int> Sl2Rep::irreducible_content() const {
    std::vector<int> content;
    auto dim_at = [&](int k) { return weights_h.eigenspace(k).dim(); };
    const int top = weights_h.eigenspaces().empty() ? 0 : weights_h.eigenspaces().rbegin()->first;
    for (int d = top; d >= 0; --d) {
        const long mult = static_cast<long>(dim_at(d)) - static_cast<long>(dim_at(d + 2));
        for (long c = 0; c < mult; ++c) content.push_back(d);
    }
    return content;
}

Matrix sl2_complete(const Matrix& n, const Matrix& h) {
    if (!n.is_square() || n.rows() != h.rows() || !h.is_square())
        throw InputError("sl2_complete dimension mismatch");
    const std::size_t dim = n.rows();
    if (!is_nilpotent(n)) throw InputError("sl2_complete: n is not nilpotent");
    if (bracket(h, n) != Scalar(-2) * n)
        throw InputError("sl2_complete: [h, n] != -2n");

    // Unknown x with [h, x] = 2x and [x, n] = h; stack both as one linear
    // system in the n^2 entries of x.
    const std::size_t nn = dim * dim;
    Matrix sys(2 * nn, nn);
    Vec rhs(2 * nn);
    for (std::size_t j = 0; j < nn; ++j) {
        const Matrix e = Matrix::devectorize(
            [&] {
                Vec v(nn);
                v[j] = Scalar(1);
                return v;
            }(),
            dim, dim);
        const Vec top = (bracket(h, e) - Scalar(2) * e).vectorize();
        const Vec bot = bracket(e, n).vectorize();
        for (std::size_t i = 0; i < nn; ++i) {
            sys.at(i, j) = top[i];
            sys.at(nn + i, j) = bot[i];
        }
    }
    const Vec hv = h.vectorize();
    for (std::size_t i = 0; i < nn; ++i) rhs[nn + i] = hv[i];
    auto sol = solve(sys, rhs);
    if (!sol) throw InputError("sl2_complete: (n, h) is not part of any sl2-triple");
    Matrix x = Matrix::devectorize(*sol, dim, dim);
    if (bracket(x, n) != h || bracket(h, x) != Scalar(2) * x)
        throw InternalError("sl2_complete: solution fails bracket verification");
    return x;
}

Sl2Rep assemble_rho(const Matrix& n, const IncreasingFiltration& w,
                    const DecreasingFiltration& finf, const Grading& yinf) {
    const std::size_t dim = w.ambient();
    if (!grades(yinf, w)) throw InputError("assemble_rho: grading does not grade W");
    if (n.rows() != dim || !n.is_square() || finf.ambient() != dim)
        throw InputError("assemble_rho: dimension mismatch");

    Matrix nminus(dim, dim), h(dim, dim), nplus(dim, dim);
    for (const auto& [k, space] : yinf.eigenspaces()) {
        const GradedPiece piece = graded_piece(w, k, yinf);
        const Matrix nk = induce_operator(n, w, piece);
        const DecreasingFiltration fk = induce_on_graded(finf, w, piece);
        const IncreasingFiltration wsharp = monodromy_weight(nk).shift(-k);
        std::string why;
        auto limit = MixedHodgeStructure::try_build(fk, wsharp, &why);
        if (!limit)
            throw InputError("assemble_rho: graded data at weight " + std::to_string(k) +
                             " has no limit mixed Hodge structure: " + why);
        if (!limit->is_split_real())
            throw InputError("assemble_rho: graded orbit at weight " + std::to_string(k) +
                             " is not split");
        if (!morphism_type(nk, *limit, -1, -1))
            throw InputError("assemble_rho: induced map at weight " + std::to_string(k) +
                             " is not a (-1,-1)-morphism of the limit structure");
        Matrix hk = limit->grading().as_operator();
        for (std::size_t i = 0; i < piece.dim(); ++i) hk.at(i, i) -= Scalar(k);
        const Matrix npk = sl2_complete(nk, hk);
        nminus += piece.section * nk * piece.projection;
        h += piece.section * hk * piece.projection;
        nplus += piece.section * npk * piece.projection;
    }

    const Matrix y_op = yinf.as_operator();
    if (!bracket(nminus, y_op).is_zero() || !bracket(h, y_op).is_zero() ||
        !bracket(nplus, y_op).is_zero())
        throw InternalError("assemble_rho: representation does not commute with the grading");
    return Sl2Rep::make(std::move(nminus), std::move(h), std::move(nplus));
}

Matrix sinc_transform(const Matrix& n) {
    if (!is_nilpotent(n)) throw InputError("sinc_transform: matrix is not nilpotent");
    const std::size_t dim = n.rows();
    Matrix acc = Matrix::identity(dim);
    Matrix power = Matrix::identity(dim);
    Rational fact(1);  // (2j+1)!
    for (std::size_t j = 1; 2 * j <= dim; ++j) {
        power = power * n * n;
        if (power.is_zero()) break;
        fact *= Rational(static_cast<long>(2 * j)) * Rational(static_cast<long>(2 * j + 1));
        const Rational coeff = Rational(j % 2 ? -1 : 1) / fact;
        acc += Scalar(coeff) * power;
    }
    return acc;
}

bool sinc_weight_overlap(const Sl2Rep& rep, int a, int b) {
    const Matrix t = sinc_transform(rep.nminus);
    const Matrix composite = rep.weights_z.projector(b) * t * rep.weights_h.projector(a);
    return !composite.is_zero();
}

bool sinc_weight_overlap_oracle(int d, int a, int b) {
    if (d < 0) throw InputError("oracle: negative highest weight");
    auto is_weight = [&](int x) { return std::abs(x) <= d && (x - d) % 2 == 0; };
    if (!is_weight(a) || !is_weight(b)) return false;
    const std::size_t m = static_cast<std::size_t>(d) + 1;

    // Basis e_p = u^p v^{d-p}; n = v d/du sends e_p to p e_{p-1}.
    Matrix n(m, m);
    for (std::size_t p = 1; p < m; ++p) n.at(p - 1, p) = Scalar(Rational(static_cast<long>(p)));
    const Matrix t = sinc_transform(n);

    // Change of basis to f_j = w^j wbar^{d-j}, w = u + iv:
    // u = (w + wbar)/2, v = (w - wbar)/(2i).
    auto monomial_in_w = [&](std::size_t p) {
        // coefficients of u^p v^{d-p} in the f-basis
        Vec coeffs(m);
        const std::size_t dp = m - 1 - p;
        const Scalar cu = Scalar(Rational(1, 2));
        const Scalar cv = Scalar(1) / Scalar(Rational(0), Rational(2));  // 1/(2i)
        // (w+wb)^p expansion times (w-wb)^{d-p} expansion
        std::vector<Scalar> first(p + 1), second(dp + 1);
        Rational binom(1);
        for (std::size_t i = 0; i <= p; ++i) {
            first[i] = Scalar(binom);
            binom = binom * Rational(static_cast<long>(p - i)) / Rational(static_cast<long>(i + 1));
        }
        binom = 1;
        for (std::size_t i = 0; i <= dp; ++i) {
            second[i] = Scalar((i % 2) ? -binom : binom);
            binom = binom * Rational(static_cast<long>(dp - i)) / Rational(static_cast<long>(i + 1));
        }
        for (std::size_t i = 0; i <= p; ++i)
            for (std::size_t j = 0; j <= dp; ++j) {
                // w^{p-i} wb^i * w^{dp-j} wb^j -> f index d - (i + j)
                const std::size_t idx = m - 1 - (i + j);
                coeffs[idx] += first[i] * second[j];
            }
        Scalar scale = Scalar(1);
        for (std::size_t i = 0; i < p; ++i) scale *= cu;
        for (std::size_t i = 0; i < dp; ++i) scale *= cv;
        for (auto& c : coeffs) c *= scale;
        return coeffs;
    };
    Matrix change(m, m);  // column p = f-coordinates of e_p
    for (std::size_t p = 0; p < m; ++p) {
        const Vec c = monomial_in_w(p);
        for (std::size_t j = 0; j < m; ++j) change.at(j, p) = c[j];
    }

    // Internal pin: T u^d = (1/(d+1)) sum_j w^j wbar^{d-j} (a direct
    // evaluation at d = 1 gives T u = u = (w + wbar)/2, fixing the scalar).
    {
        Vec td(m);
        td[m - 1] = Scalar(1);
        const Vec in_w = change.apply(t.apply(td));
        const Scalar expected = Scalar(Rational(1, d + 1));
        for (std::size_t j = 0; j < m; ++j)
            if (in_w[j] != expected)
                throw InternalError("oracle self-test failed: T u^d is not the flat w-sum");
    }

    const std::size_t p = static_cast<std::size_t>((a + d) / 2);
    Vec e(m);
    e[p] = Scalar(1);
    const Vec out = change.apply(t.apply(e));
    const std::size_t jb = static_cast<std::size_t>((b + d) / 2);
    return !out[jb].is_zero();
}

bool sinc_weight_overlap_stated(const std::vector<int>& highest_weights, int a, int b) {
    return std::any_of(highest_weights.begin(), highest_weights.end(), [&](int d) {
        auto is_weight = [&](int x) { return std::abs(x) <= d && (x - d) % 2 == 0; };
        return is_weight(a) && is_weight(b) && (a == d || a < std::abs(b));
    });
}

Sl2HodgeFrame sl2_hodge_frame() {
    Sl2HodgeFrame f;
    f.nminus = Matrix{{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}};
    f.h = Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
    f.nplus = Matrix{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
    const Scalar i = Scalar::i();
    const Scalar half = Scalar(Rational(1, 2));
    f.xminus = half * (f.h - i * f.nminus - i * f.nplus);
    f.xplus = half * (f.h + i * f.nminus + i * f.nplus);
    f.z = i * (f.nminus - f.nplus);
    return f;
}

}  // namespace mhx
