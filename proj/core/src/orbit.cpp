#include "mhx/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "mhx/nilpotent.hpp"

namespace mhx {

Matrix PeriodMapModel::gamma_at(const Rational& s) const {
    const std::size_t n = orbit.w.ambient();
    Matrix acc(n, n);
    Rational power(1);
    int last = 0;
    for (const auto& [j, coeff] : gamma) {
        for (; last < j; ++last) power *= s;
        acc += Scalar(power) * coeff;
    }
    return acc;
}

bool OrbitCheckReport::pass() const {
    if (!(n_real && n_nilpotent && n_preserves_w && horizontal && graded_dims_constant))
        return false;
    return std::all_of(samples.begin(), samples.end(),
                       [](const Sample& s) { return s.is_mhs; });
}

OrbitCheckReport check_orbit(const NilpotentOrbit& orbit, const std::vector<Rational>& ys) {
    OrbitCheckReport report;
    const std::size_t n = orbit.w.ambient();
    if (orbit.n.rows() != n || !orbit.n.is_square() || orbit.f.ambient() != n)
        throw InputError("check_orbit: dimension mismatch");
    report.n_real = orbit.n.is_real();
    report.n_nilpotent = is_nilpotent(orbit.n);
    report.n_preserves_w = preserves(orbit.n, orbit.w);
    report.horizontal = lowers_filtration(orbit.n, orbit.f, 1);
    report.graded_dims_constant = true;
    for (const Rational& y : ys) {
        OrbitCheckReport::Sample sample;
        sample.y = y;
        const Matrix g = exp_nilpotent(Scalar(Rational(0), y) * orbit.n);
        std::string why;
        auto mhs = MixedHodgeStructure::try_build(orbit.f.image_under(g), orbit.w, &why);
        sample.is_mhs = mhs.has_value();
        if (mhs)
            sample.hodge_numbers = mhs->hodge_numbers();
        else
            sample.witness = why;
        report.samples.push_back(std::move(sample));
    }
    for (std::size_t i = 1; i < report.samples.size(); ++i)
        if (report.samples[i].is_mhs && report.samples[0].is_mhs &&
            report.samples[i].hodge_numbers != report.samples[0].hodge_numbers)
            report.graded_dims_constant = false;
    return report;
}

Sl2StructureReport sl2_structure_report(const NilpotentOrbit& orbit, const Grading& yinf) {
    if (!grades(yinf, orbit.w))
        throw InputError("sl2_structure_report: grading does not grade W");
    if (!yinf.is_real()) throw InputError("sl2_structure_report: grading is not real");
    Sl2StructureReport report;
    for (const auto& [d, comp] : yinf.decompose_ad(orbit.n)) {
        if (d > 0)
            throw InputError("sl2_structure_report: N has a raising component");
        report.components.emplace(-d, comp);
    }
    const Sl2Rep rho = assemble_rho(orbit.n, orbit.w, orbit.f, yinf);
    const std::size_t n = orbit.w.ambient();
    auto comp_at = [&](int k) {
        auto it = report.components.find(k);
        return it == report.components.end() ? Matrix(n, n) : it->second;
    };
    report.n0_equals_rho_nminus = comp_at(0) == rho.nminus;
    report.n_minus1_zero = comp_at(1).is_zero();
    for (const auto& [k, comp] : report.components) {
        if (k < 2) continue;
        const bool hw = bracket(rho.h, comp) == Scalar(k - 2) * comp &&
                        bracket(rho.nplus, comp).is_zero();
        report.highest_weight_ok.emplace(k, hw);
    }
    return report;
}

bool Sl2StructureReport::all_checks() const {
    if (!n0_equals_rho_nminus || !n_minus1_zero) return false;
    return std::all_of(highest_weight_ok.begin(), highest_weight_ok.end(),
                       [](const auto& e) { return e.second; });
}

namespace {

/// Split verdict for every induced graded orbit: each (F Gr_k, W(N_k)[-k])
/// must be a split mixed Hodge structure.
bool graded_orbits_split(const NilpotentOrbit& orbit, std::string* witness) {
    for (int k = orbit.w.lowest(); k <= orbit.w.highest(); ++k) {
        if (orbit.w.at(k).dim() == orbit.w.at(k - 1).dim()) continue;
        const GradedPiece piece = graded_piece(orbit.w, k);
        const Matrix nk = induce_operator(orbit.n, orbit.w, piece);
        const DecreasingFiltration fk = induce_on_graded(orbit.f, orbit.w, piece);
        const IncreasingFiltration wsharp = monodromy_weight(nk).shift(-k);
        std::string why;
        auto limit = MixedHodgeStructure::try_build(fk, wsharp, &why);
        if (!limit) {
            if (witness)
                *witness = "graded orbit at weight " + std::to_string(k) +
                           " has no limit mixed Hodge structure: " + why;
            return false;
        }
        if (!limit->is_split_real()) {
            if (witness)
                *witness = "graded orbit at weight " + std::to_string(k) + " is not split";
            return false;
        }
    }
    return true;
}

}  // namespace

AdmissibilityReport split_admissibility(const NilpotentOrbit& orbit,
                                        const std::vector<Rational>& ys) {
    AdmissibilityReport report;
    report.orbit_check = check_orbit(orbit, ys);
    if (!report.orbit_check.pass()) {
        report.witness = "orbit data fails check_orbit";
        return report;
    }
    report.limiting_filtration_exists = true;  // the orbit's own F is the limit

    // Direct route.
    const TripleCheck tc = check_triple(orbit.f, orbit.w, orbit.n);
    report.relative_weight_exists = tc.rel_weight_exists;
    report.is_mhs_pair = tc.is_mhs_pair;
    report.n_is_minus1minus1 = tc.n_is_minus1_minus1;
    report.w_by_sub_mhs = tc.w_by_sub_mhs;
    report.rel_w = tc.rel_w;
    report.witness = tc.witness;
    if (tc.limit_mhs) report.is_split = tc.limit_mhs->is_split_real();

    std::string graded_witness;
    report.graded_orbits_split = graded_orbits_split(orbit, &graded_witness);
    if (!report.graded_orbits_split && report.witness.empty()) report.witness = graded_witness;

    // Limit route: transported gradings at the sampled y.
    std::vector<Grading> traces;
    for (const Rational& y : ys) {
        const Matrix g = exp_nilpotent(Scalar(Rational(0), y) * orbit.n);
        const Matrix ginv = exp_nilpotent(Scalar(Rational(0), -y) * orbit.n);
        auto mhs = MixedHodgeStructure::try_build(orbit.f.image_under(g), orbit.w);
        if (!mhs) throw InternalError("split_admissibility: sample lost MHS membership");
        traces.push_back(mhs->grading().conjugated_by(ginv));
    }
    report.limit_constant = std::all_of(traces.begin(), traces.end(),
                                        [&](const Grading& t) { return t == traces.front(); });
    if (report.limit_constant && !traces.empty()) {
        report.limit_real = traces.front().is_real();
        report.limit_grades_w = grades(traces.front(), orbit.w);
    }

    // Y_infty and the sl2 structure, when available.
    if (tc.admissible()) {
        report.y_infty = y_of_triple(orbit.f, orbit.w, orbit.n);
        report.y_infty_real = report.y_infty->is_real();
        if (report.split_verdict_direct() && report.y_infty_real)
            report.sl2_structure = sl2_structure_report(orbit, *report.y_infty);
    } else if (report.limit_constant && report.limit_grades_w) {
        report.y_infty = traces.front();
        report.y_infty_real = report.y_infty->is_real();
    }

    if (report.split_verdict_direct() != report.split_verdict_limit())
        throw InternalError("split_admissibility: direct and limit routes disagree (direct=" +
                            std::to_string(report.split_verdict_direct()) +
                            ", limit=" + std::to_string(report.split_verdict_limit()) + ")");
    return report;
}

AdmissibilityReport unipotent_admissibility(const PeriodMapModel& model) {
    const NilpotentOrbit& orbit = model.orbit;
    AdmissibilityReport report;
    report.orbit_check = check_orbit(orbit, {Rational(1)});
    if (!report.orbit_check.n_real || !report.orbit_check.n_nilpotent ||
        !report.orbit_check.n_preserves_w || !report.orbit_check.horizontal)
        throw InputError("unipotent_admissibility: invalid orbit data");
    if (!lowers_filtration(orbit.n, orbit.w, 1))
        throw InputError("unipotent_admissibility: N does not act trivially on Gr^W");
    for (const auto& [j, coeff] : model.gamma)
        if (!lowers_filtration(coeff, orbit.w, 1))
            throw InputError("unipotent_admissibility: Gamma_" + std::to_string(j) +
                             " is not in Lie_{-1}");
    std::string why;
    auto mhs = MixedHodgeStructure::try_build(orbit.f, orbit.w, &why);
    if (!mhs)
        throw InputError("unipotent_admissibility: (F, W) is not a mixed Hodge structure: " +
                         why);
    report.limiting_filtration_exists = true;
    report.graded_orbits_split = true;  // induced graded structures are constant and pure

    const bool lowers_two = lowers_filtration(orbit.n, orbit.w, 2);
    const RelWeightResult rel = relative_weight(orbit.n, orbit.w);
    if (rel.exists != lowers_two)
        throw InternalError("unipotent_admissibility: relative weight existence disagrees with "
                            "the Lie_{-2} criterion");
    if (rel.exists && *rel.filtration != orbit.w)
        throw InternalError("unipotent_admissibility: relative weight filtration is not W");
    report.relative_weight_exists = rel.exists;
    report.rel_w = rel.filtration;
    report.witness = rel.failure_witness;

    const Matrix obstruction = mhs->gl().component(orbit.n, 0, -1);
    report.obstruction = obstruction;
    if (obstruction.is_zero() != lowers_two)
        throw InternalError(
            "unipotent_admissibility: (0,-1) obstruction disagrees with the verdict");

    if (rel.exists) {
        report.is_mhs_pair = true;  // (F, rel W) = (F, W)
        report.n_is_minus1minus1 = morphism_type(orbit.n, *mhs, -1, -1);
        report.w_by_sub_mhs = true;
        report.is_split = mhs->is_split_real();
        report.y_infty = mhs->grading();
        report.y_infty_real = report.y_infty->is_real();
        if (report.y_infty_real)
            report.sl2_structure = sl2_structure_report(orbit, *report.y_infty);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Traces

namespace {

double exact_max_abs(const Matrix& m) {
    double mx = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, fp::to_double(m.at(i, j)));
    return mx;
}

Grading trace_prediction(const PeriodMapModel& model) {
    const NilpotentOrbit& orbit = model.orbit;
    const bool unipotent_like =
        lowers_filtration(orbit.n, orbit.w, 1) &&
        std::all_of(model.gamma.begin(), model.gamma.end(), [&](const auto& e) {
            return lowers_filtration(e.second, orbit.w, 1);
        });
    if (unipotent_like) {
        auto mhs = MixedHodgeStructure::try_build(orbit.f, orbit.w);
        if (mhs) return mhs->grading();
    }
    TripleCheck tc = check_triple(orbit.f, orbit.w, orbit.n);
    if (tc.admissible()) return y_of_triple(orbit.f, orbit.w, orbit.n);
    throw InputError("grading_trace: no predicted limit grading for this model: " + tc.witness);
}

}  // namespace

TraceReport grading_trace(const PeriodMapModel& model, const std::vector<Rational>& ys,
                          TraceMode mode, const std::optional<Rational>& s_exact) {
    const NilpotentOrbit& orbit = model.orbit;
    const std::size_t n = orbit.w.ambient();
    TraceReport report;
    report.mode = mode;
    report.prediction = trace_prediction(model);
    const Matrix prediction_op = report.prediction.as_operator();

    if (mode == TraceMode::ExactDecoupled) {
        const Rational s = s_exact.value_or(Rational(0));
        for (const Rational& y : ys) {
            TraceSample sample;
            sample.y = y;
            const Matrix flow = exp_nilpotent(Scalar(Rational(0), y) * orbit.n);
            const Matrix twist = exp_nilpotent(model.gamma_at(s));
            const Matrix g = flow * twist;
            std::string why;
            auto mhs = MixedHodgeStructure::try_build(orbit.f.image_under(g), orbit.w, &why);
            if (!mhs) {
                sample.valid = false;
                sample.witness = "not a mixed Hodge structure at this sample: " + why;
                report.samples.push_back(std::move(sample));
                continue;
            }
            const Matrix back = exp_nilpotent(Scalar(Rational(0), -y) * orbit.n);
            const Grading trace = mhs->grading().conjugated_by(back);
            const Matrix op = trace.as_operator();
            sample.grading = trace;
            sample.distance = exact_max_abs(op - prediction_op);
            sample.norm = exact_max_abs(op);
            report.samples.push_back(std::move(sample));
        }
    } else {
        const fp::FMat nf = fp::from_exact(orbit.n);
        for (const Rational& y : ys) {
            TraceSample sample;
            sample.y = y;
            fp::Stats stats;
            const double yd = y.get_d();
            const double s = std::exp(-2.0 * M_PI * yd);
            fp::FMat gamma_val = fp::fzero(n, n);
            double power = 1.0;
            int last = 0;
            for (const auto& [j, coeff] : model.gamma) {
                for (; last < j; ++last) power *= s;
                gamma_val = fp::fadd(gamma_val, fp::fscale(power, fp::from_exact(coeff)));
            }
            const fp::FMat flow = fp::fexp_nilpotent(fp::fscale(fp::Cplx(0.0, yd), nf));
            const fp::FMat back = fp::fexp_nilpotent(fp::fscale(fp::Cplx(0.0, -yd), nf));
            const fp::FMat g = fp::fmul(flow, fp::fexp_nilpotent(gamma_val));

            fp::FDecreasing f0 = fp::from_exact(orbit.f, &stats);
            const fp::FDecreasing fy = fp::fimage(f0, g, &stats);
            const fp::FIncreasing wf = fp::from_exact(orbit.w, &stats);
            std::map<std::pair<int, int>, fp::FSubspace> pieces;
            if (!fp::fbigrading(fy, wf, &pieces, &stats)) {
                sample.valid = false;
                sample.flagged = true;
                sample.witness = "float bigrading failed at the rank tolerance";
                report.samples.push_back(std::move(sample));
                continue;
            }
            const fp::FMat yop = fp::fgrading_operator(pieces, n, &stats);
            const fp::FMat traced = fp::fmul(fp::fmul(back, yop), flow);
            sample.approx = traced;
            sample.flagged = stats.ambiguous;
            const fp::FMat pred = fp::from_exact(prediction_op);
            double dist = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    dist = std::max(dist, std::abs(traced[i][j] - pred[i][j]));
            sample.distance = dist;
            sample.norm = fp::max_abs(traced);
            report.samples.push_back(std::move(sample));
        }
    }

    // Trend classification over usable samples.
    std::vector<const TraceSample*> usable;
    for (const TraceSample& s : report.samples)
        if (s.valid && !s.flagged) usable.push_back(&s);
    bool doubling = usable.size() >= 2;
    for (std::size_t i = 1; i < usable.size(); ++i)
        if (usable[i]->norm < 2.0 * usable[i - 1]->norm) doubling = false;
    report.bounded = !doubling;
    report.converged = !usable.empty() && usable.back()->distance < 1e-6;
    return report;
}

}  // namespace mhx
