#include "mhx/deligne.hpp"

#include <algorithm>

#include "mhx/nilpotent.hpp"
#include "mhx/sl2.hpp"

namespace mhx {

namespace {

void check_grading_instance(const Matrix& n, const Grading& rel_y,
                            const IncreasingFiltration& w) {
    if (n.rows() != w.ambient() || !n.is_square() || rel_y.ambient() != w.ambient())
        throw InputError("deligne_grading: dimension mismatch");
    if (!is_nilpotent(n)) throw InputError("deligne_grading: N is not nilpotent");
    if (!preserves(n, w)) throw InputError("deligne_grading: N does not preserve W");
    const Matrix rel_op = rel_y.as_operator();
    if (!preserves(rel_op, w)) throw InputError("deligne_grading: relY does not preserve W");
    if (bracket(rel_op, n) != Scalar(-2) * n)
        throw InputError("deligne_grading: [relY, N] != -2N");
    if (!verify_rel(n, w, filtration_of(rel_y)))
        throw InputError(
            "deligne_grading: relY does not grade the relative weight filtration of (N, W)");
}

}  // namespace

Grading initial_commuting_grading(const Grading& rel_y, const IncreasingFiltration& w) {
    const std::size_t n = w.ambient();
    std::map<int, Subspace> spaces;
    for (const auto& [m, em] : rel_y.eigenspaces()) {
        Subspace prev = Subspace::zero(n);
        for (int k = w.lowest(); k <= w.highest(); ++k) {
            Subspace cut = em.intersect(w.at(k));
            if (cut.dim() == prev.dim()) continue;
            const Subspace fresh = echelon_complement(prev, cut);
            auto it = spaces.find(k);
            if (it == spaces.end())
                spaces.emplace(k, fresh);
            else
                it->second = it->second.sum(fresh);
            prev = std::move(cut);
        }
    }
    Grading y0(n, std::move(spaces));
    if (!grades(y0, w))
        throw InputError("initial grading construction failed: relY is incompatible with W");
    return y0;
}

DeligneGradingResult deligne_grading(const Matrix& n, const Grading& rel_y,
                                     const IncreasingFiltration& w) {
    return deligne_grading(n, rel_y, w, initial_commuting_grading(rel_y, w));
}

DeligneGradingResult deligne_grading(const Matrix& n, const Grading& rel_y,
                                     const IncreasingFiltration& w, const Grading& y0) {
    check_grading_instance(n, rel_y, w);
    const std::size_t dim = w.ambient();
    const std::size_t nn = dim * dim;
    const Matrix rel_op = rel_y.as_operator();
    if (!grades(y0, w) || !bracket(rel_op, y0.as_operator()).is_zero())
        throw InputError("deligne_grading: initial grading must grade W and commute with relY");

    Grading y = y0;
    const int width = w.highest() - w.lowest();
    for (int r = 1; r <= width; ++r) {
        auto comps = y.decompose_ad(n);
        auto comp_at = [&](int d) {
            auto it = comps.find(d);
            return it == comps.end() ? Matrix(dim, dim) : it->second;
        };
        const Matrix n0 = comp_at(0);
        Matrix defect = comp_at(-r);
        for (int e = 0; e < r - 1; ++e) defect = bracket(n0, defect);
        if (defect.is_zero()) continue;

        // Stage-r correction: find X of ad-Y degree -r, commuting with relY,
        // with (ad N0)^{r-1} [X, N0] = (ad N0)^{r-1} N_{-r}; then conjugate
        // the grading by exp(X). Affine-linear in X.
        std::vector<Matrix> projectors;
        std::vector<int> eigenvalues;
        for (const auto& [k, space] : y.eigenspaces()) {
            eigenvalues.push_back(k);
            projectors.push_back(y.projector(k));
        }
        auto degree_part = [&](const Matrix& x) {
            Matrix acc(dim, dim);
            for (std::size_t a = 0; a < eigenvalues.size(); ++a)
                for (std::size_t b = 0; b < eigenvalues.size(); ++b)
                    if (eigenvalues[a] - eigenvalues[b] == -r)
                        acc += projectors[a] * x * projectors[b];
            return acc;
        };
        auto condition = [&](const Matrix& x) {
            Matrix v = bracket(x, n0);
            for (int e = 0; e < r - 1; ++e) v = bracket(n0, v);
            return v;
        };

        Matrix sys(3 * nn, nn);
        Vec rhs(3 * nn);
        for (std::size_t j = 0; j < nn; ++j) {
            Vec unit(nn);
            unit[j] = Scalar(1);
            const Matrix e = Matrix::devectorize(unit, dim, dim);
            const Vec r1 = (e - degree_part(e)).vectorize();
            const Vec r2 = bracket(e, rel_op).vectorize();
            const Vec r3 = condition(e).vectorize();
            for (std::size_t i = 0; i < nn; ++i) {
                sys.at(i, j) = r1[i];
                sys.at(nn + i, j) = r2[i];
                sys.at(2 * nn + i, j) = r3[i];
            }
        }
        const Vec dv = defect.vectorize();
        for (std::size_t i = 0; i < nn; ++i) rhs[2 * nn + i] = dv[i];
        auto sol = solve(sys, rhs);
        if (!sol)
            throw InternalError("deligne_grading: stage " + std::to_string(r) +
                                " correction system is infeasible");
        const Matrix x = Matrix::devectorize(*sol, dim, dim);
        y = y.conjugated_by(exp_nilpotent(x));
    }

    DeligneGradingResult result;
    result.y = y;
    auto comps = y.decompose_ad(n);
    for (const auto& [d, comp] : comps) {
        if (d > 0) throw InternalError("deligne_grading: raising component survived");
        result.components.emplace(-d, comp);
    }
    result.cond_commutes = bracket(rel_op, y.as_operator()).is_zero();
    result.cond_no_degree_one = result.components.find(1) == result.components.end();
    result.cond_primitive = true;
    const Matrix n0 = result.components.count(0) ? result.components.at(0) : Matrix(dim, dim);
    for (const auto& [k, comp] : result.components) {
        if (k == 0) continue;
        Matrix v = comp;
        for (int e = 0; e < k - 1; ++e) v = bracket(n0, v);
        if (!v.is_zero()) result.cond_primitive = false;
    }
    if (!grades(y, w) || !result.certificate())
        throw InternalError("deligne_grading: certificate failed on constructed grading");
    return result;
}

TripleCheck check_triple(const DecreasingFiltration& f, const IncreasingFiltration& w,
                         const Matrix& n) {
    TripleCheck tc;
    if (f.ambient() != w.ambient() || n.rows() != w.ambient() || !n.is_square())
        throw InputError("check_triple: dimension mismatch");
    if (!is_nilpotent(n)) throw InputError("check_triple: N is not nilpotent");
    if (!preserves(n, w)) throw InputError("check_triple: N does not preserve W");

    RelWeightResult rel = relative_weight(n, w);
    tc.rel_weight_exists = rel.exists;
    if (!rel.exists) {
        tc.witness = "relative weight filtration does not exist: " + rel.failure_witness;
        return tc;
    }
    tc.rel_w = rel.filtration;

    std::string why;
    auto mhs = MixedHodgeStructure::try_build(f, *rel.filtration, &why);
    tc.is_mhs_pair = mhs.has_value();
    if (!mhs) {
        tc.witness = "(F, relW) is not a mixed Hodge structure: " + why;
        return tc;
    }
    tc.limit_mhs = mhs;

    tc.n_is_minus1_minus1 = morphism_type(n, *mhs, -1, -1);
    if (!tc.n_is_minus1_minus1) tc.witness = "N is not a (-1,-1)-morphism of (F, relW)";

    tc.w_by_sub_mhs = true;
    for (const auto& entry : w.jumps()) {
        const Subspace& wk = entry.second;
        Subspace acc = Subspace::zero(w.ambient());
        for (const auto& [type, space] : mhs->pieces()) acc = acc.sum(wk.intersect(space));
        if (acc != wk) {
            tc.w_by_sub_mhs = false;
            if (tc.witness.empty())
                tc.witness = "W_" + std::to_string(entry.first) +
                             " is not a sub mixed Hodge structure of (F, relW)";
            break;
        }
    }
    return tc;
}

Grading y_of_triple(const DecreasingFiltration& f, const IncreasingFiltration& w,
                    const Matrix& n) {
    TripleCheck tc = check_triple(f, w, n);
    if (!tc.admissible()) throw InputError("y_of_triple: triple is not admissible: " + tc.witness);
    const Grading rel_y = tc.limit_mhs->grading();
    DeligneGradingResult res = deligne_grading(n, rel_y, w);
    const Matrix y_op = res.y.as_operator();
    for (const auto& entry : f.jumps()) {
        const Subspace& fp = entry.second;
        if (!fp.contains(fp.image_under(y_op)))
            throw InternalError("y_of_triple: constructed grading does not preserve F");
    }
    if (tc.limit_mhs->is_split_real() && n.is_real() && w.is_real() && !res.y.is_real())
        throw InternalError("y_of_triple: split real data produced a non-real grading");
    return res.y;
}

FlowGradingPair flowed_grading_pair(const DecreasingFiltration& f, const IncreasingFiltration& w,
                                    const Matrix& n, const Rational& y) {
    if (y <= 0) throw InputError("flowed_grading_pair: flow parameter must be positive");
    TripleCheck tc = check_triple(f, w, n);
    if (!tc.admissible())
        throw InputError("flowed_grading_pair: triple is not admissible: " + tc.witness);
    if (!tc.limit_mhs->is_split_real())
        throw InputError("flowed_grading_pair: (F, relW) is not split over R");
    const Matrix g = exp_nilpotent(Scalar(Rational(0), y) * n);
    std::string why;
    auto flowed = MixedHodgeStructure::try_build(f.image_under(g), w, &why);
    if (!flowed)
        throw InputError("flowed_grading_pair: (exp(iyN).F, W) is not a mixed Hodge structure: " +
                         why);
    FlowGradingPair pair{flowed->grading(), y_of_triple(f, w, n).conjugated_by(g), false};
    pair.equal = pair.lhs == pair.rhs;
    return pair;
}

// ---------------------------------------------------------------------------
// Functoriality

namespace {

Vec embed(const Vec& v, std::size_t total, std::size_t offset) {
    Vec r(total);
    for (std::size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
    return r;
}

Subspace embed_subspace(const Subspace& s, std::size_t total, std::size_t offset) {
    std::vector<Vec> rows;
    for (const Vec& v : s.basis()) rows.push_back(embed(v, total, offset));
    return Subspace::span(rows, total);
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
    std::vector<Vec> rows;
    const std::size_t nb = b.ambient();
    for (const Vec& u : a.basis())
        for (const Vec& v : b.basis()) {
            Vec r(a.ambient() * nb);
            for (std::size_t i = 0; i < a.ambient(); ++i)
                for (std::size_t j = 0; j < nb; ++j) r[i * nb + j] = u[i] * v[j];
            rows.push_back(std::move(r));
        }
    return Subspace::span(rows, a.ambient() * nb);
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

}  // namespace

GradingInstance direct_sum_instance(const GradingInstance& a, const GradingInstance& b) {
    const std::size_t na = a.w.ambient(), nb = b.w.ambient(), n = na + nb;
    GradingInstance out;
    out.n = block_diag(a.n, b.n);
    std::map<int, Subspace> wsteps;
    const int lo = std::min(a.w.lowest(), b.w.lowest());
    const int hi = std::max(a.w.highest(), b.w.highest());
    for (int k = lo; k <= hi; ++k)
        wsteps.emplace(k, embed_subspace(a.w.at(k), n, 0).sum(embed_subspace(b.w.at(k), n, na)));
    out.w = IncreasingFiltration(n, std::move(wsteps));
    std::map<int, Subspace> grades_map;
    for (const auto& [k, space] : a.rel_y.eigenspaces())
        grades_map.emplace(k, embed_subspace(space, n, 0));
    for (const auto& [k, space] : b.rel_y.eigenspaces()) {
        auto it = grades_map.find(k);
        if (it == grades_map.end())
            grades_map.emplace(k, embed_subspace(space, n, na));
        else
            it->second = it->second.sum(embed_subspace(space, n, na));
    }
    out.rel_y = Grading(n, std::move(grades_map));
    return out;
}

GradingInstance dual_instance(const GradingInstance& a) {
    const std::size_t n = a.w.ambient();
    GradingInstance out;
    out.n = -a.n.transpose();
    std::map<int, Subspace> wsteps;
    for (int k = -a.w.highest(); k <= -a.w.lowest(); ++k) {
        const Matrix ann = a.w.at(-k - 1).annihilator();
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
        wsteps.emplace(k, Subspace::span(rows, n));
    }
    out.w = IncreasingFiltration(n, std::move(wsteps));
    out.rel_y = integer_eigenspaces(-a.rel_y.as_operator().transpose());
    return out;
}

GradingInstance tensor_instance(const GradingInstance& a, const GradingInstance& b) {
    const std::size_t na = a.w.ambient(), nb = b.w.ambient();
    GradingInstance out;
    out.n = kron(a.n, Matrix::identity(nb)) + kron(Matrix::identity(na), b.n);
    std::map<int, Subspace> wsteps;
    const int lo = a.w.lowest() + b.w.lowest();
    const int hi = a.w.highest() + b.w.highest();
    for (int k = lo; k <= hi; ++k) {
        Subspace acc = Subspace::zero(na * nb);
        for (int i = a.w.lowest(); i <= a.w.highest(); ++i)
            acc = acc.sum(tensor_subspace(a.w.at(i), b.w.at(k - i)));
        wsteps.emplace(k, std::move(acc));
    }
    out.w = IncreasingFiltration(na * nb, std::move(wsteps));
    std::map<int, Subspace> grades_map;
    for (const auto& [i, ea] : a.rel_y.eigenspaces())
        for (const auto& [j, eb] : b.rel_y.eigenspaces()) {
            const Subspace t = tensor_subspace(ea, eb);
            auto it = grades_map.find(i + j);
            if (it == grades_map.end())
                grades_map.emplace(i + j, t);
            else
                it->second = it->second.sum(t);
        }
    out.rel_y = Grading(na * nb, std::move(grades_map));
    return out;
}

bool functoriality_check(const std::vector<GradingInstance>& instances, FunctorOp op) {
    switch (op) {
        case FunctorOp::DirectSum: {
            if (instances.size() != 2) throw InputError("direct sum check needs two instances");
            const auto ya = deligne_grading(instances[0].n, instances[0].rel_y, instances[0].w);
            const auto yb = deligne_grading(instances[1].n, instances[1].rel_y, instances[1].w);
            const GradingInstance c = direct_sum_instance(instances[0], instances[1]);
            const auto yc = deligne_grading(c.n, c.rel_y, c.w);
            return yc.y.as_operator() ==
                   block_diag(ya.y.as_operator(), yb.y.as_operator());
        }
        case FunctorOp::Dual: {
            if (instances.size() != 1) throw InputError("dual check needs one instance");
            const auto ya = deligne_grading(instances[0].n, instances[0].rel_y, instances[0].w);
            const GradingInstance c = dual_instance(instances[0]);
            const auto yc = deligne_grading(c.n, c.rel_y, c.w);
            return yc.y.as_operator() == -ya.y.as_operator().transpose();
        }
        case FunctorOp::Tensor: {
            if (instances.size() != 2) throw InputError("tensor check needs two instances");
            const auto ya = deligne_grading(instances[0].n, instances[0].rel_y, instances[0].w);
            const auto yb = deligne_grading(instances[1].n, instances[1].rel_y, instances[1].w);
            const GradingInstance c = tensor_instance(instances[0], instances[1]);
            const auto yc = deligne_grading(c.n, c.rel_y, c.w);
            const std::size_t na = instances[0].w.ambient(), nb = instances[1].w.ambient();
            const Matrix expected = kron(ya.y.as_operator(), Matrix::identity(nb)) +
                                    kron(Matrix::identity(na), yb.y.as_operator());
            return yc.y.as_operator() == expected;
        }
    }
    throw InputError("unknown functor operation");
}

}  // namespace mhx
