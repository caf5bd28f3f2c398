// Acceptance suite: one pass/fail line per criterion, exact tolerances
// pinned in code. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mhx/factorization.hpp"
#include "mhx/nilpotent.hpp"
#include "mhx/runner.hpp"
#include "support/generators.hpp"

using namespace mhx;
using mhx_test::Rng;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

std::string fixture_path(const std::string& name) {
    return std::string(MHX_FIXTURE_DIR) + "/" + name;
}

InstanceDocument load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw InputError("missing fixture " + name);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str());
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    Rng rng(10001);
    int built = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const auto data = mhx_test::random_mhs(rng, 8);
        const auto& mhs = data.mhs;
        const std::size_t n = mhs.dim();
        const auto& f = mhs.hodge_filtration();
        const auto& w = mhs.weight_filtration();

        // direct sum decomposition
        std::size_t total = 0;
        std::vector<Vec> all;
        for (const auto& [type, space] : mhs.pieces()) {
            total += space.dim();
            for (const Vec& v : space.basis()) all.push_back(v);
        }
        if (total != n || Subspace::span(all, n).dim() != n) {
            out.pass = false;
            out.detail = "direct sum failed at instance " + std::to_string(iter);
            return out;
        }
        // F and W recovery
        for (int p = f.lowest(); p <= f.highest() + 1; ++p) {
            Subspace acc = Subspace::zero(n);
            for (const auto& [type, space] : mhs.pieces())
                if (type.first >= p) acc = acc.sum(space);
            if (acc != f.at(p)) {
                out.pass = false;
                out.detail = "F recovery failed at instance " + std::to_string(iter);
                return out;
            }
        }
        for (int k = w.lowest() - 1; k <= w.highest(); ++k) {
            Subspace acc = Subspace::zero(n);
            for (const auto& [type, space] : mhs.pieces())
                if (type.first + type.second <= k) acc = acc.sum(space);
            if (acc != w.at(k)) {
                out.pass = false;
                out.detail = "W recovery failed at instance " + std::to_string(iter);
                return out;
            }
        }
        // conjugation congruence
        for (const auto& [type, space] : mhs.pieces()) {
            Subspace target = mhs.piece(type.second, type.first);
            for (const auto& [t2, s2] : mhs.pieces())
                if (t2.first < type.second && t2.second < type.first) target = target.sum(s2);
            if (!target.contains(space.conjugate())) {
                out.pass = false;
                out.detail = "conjugation congruence failed at instance " + std::to_string(iter);
                return out;
            }
        }
        // rebuild idempotence
        const auto again = MixedHodgeStructure::build(f, w);
        if (again.pieces() != mhs.pieces()) {
            out.pass = false;
            out.detail = "rebuild changed the bigrading at instance " + std::to_string(iter);
            return out;
        }
        ++built;
    }
    out.detail = std::to_string(built) + " structures verified";
    return out;
}

Outcome criterion2() {
    Outcome out;
    // all Jordan types up to dim 8
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&,
                       std::vector<std::vector<std::size_t>>&)>
        rec = [&](std::size_t left, std::size_t maxp, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& acc) {
            if (left == 0) {
                acc.push_back(cur);
                return;
            }
            for (std::size_t p = std::min(left, maxp); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p, cur, acc);
                cur.pop_back();
            }
        };
    int checked = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cur;
        rec(n, n, cur, parts);
        for (const auto& blocks : parts) {
            Matrix m(n, n);
            std::size_t base = 0;
            for (std::size_t b : blocks) {
                for (std::size_t j = 1; j < b; ++j) m.at(base + j - 1, base + j) = Scalar(1);
                base += b;
            }
            const IncreasingFiltration w = monodromy_weight(m);
            if (!lowers_filtration(m, w, 2)) {
                out.pass = false;
                out.detail = "property (i) failed for a Jordan type of dim " + std::to_string(n);
                return out;
            }
            for (int l = 1; l <= w.highest(); ++l) {
                const bool dims = w.at(l).dim() - w.at(l - 1).dim() ==
                                  w.at(-l).dim() - w.at(-l - 1).dim();
                const Subspace mapped =
                    w.at(l).image_under(m.pow(static_cast<std::size_t>(l)));
                if (!dims || mapped.sum(w.at(-l - 1)) != w.at(-l)) {
                    out.pass = false;
                    out.detail = "property (ii) failed for a Jordan type of dim " +
                                 std::to_string(n);
                    return out;
                }
            }
            ++checked;
        }
    }

    // fixtures
    const auto tate = load_fixture("tate.json");
    const auto rt = relative_weight(*tate.n, *tate.weight);
    if (!rt.exists || *rt.filtration != *tate.weight) {
        out.pass = false;
        out.detail = "tate: rel W != W";
        return out;
    }
    const auto elliptic = load_fixture("elliptic.json");
    const auto re = relative_weight(*elliptic.n, *elliptic.weight);
    if (!re.exists || *re.filtration != monodromy_weight(*elliptic.n).shift(-1)) {
        out.pass = false;
        out.detail = "elliptic: rel W != W(N)[-1]";
        return out;
    }
    const auto badrel = load_fixture("badrel.json");
    const auto rb = relative_weight(*badrel.n, *badrel.weight);
    if (rb.exists || rb.failure_witness.empty()) {
        out.pass = false;
        out.detail = "badrel: expected nonexistence with witness";
        return out;
    }
    if (verify_rel(*tate.n, *tate.weight, rt.filtration->shift(1))) {
        out.pass = false;
        out.detail = "verify_rel accepted a shifted candidate";
        return out;
    }
    out.detail = std::to_string(checked) + " Jordan types + fixtures";
    return out;
}

Outcome criterion3() {
    Outcome out;
    Rng rng(10003);
    for (int iter = 0; iter < 200; ++iter) {
        const auto data = mhx_test::random_mhs(rng, 8);
        const auto& mhs = data.mhs;
        const auto& w = mhs.weight_filtration();
        const Matrix alpha = mhx_test::random_weight_lowering(rng, data.slot_weight, 1);
        const auto r = exp_triple_factorization(alpha, mhs);
        if (exp_nilpotent(r.gamma) * exp_nilpotent(r.lambda) * exp_nilpotent(r.phi) !=
            exp_nilpotent(alpha)) {
            out.pass = false;
            out.detail = "product identity failed at instance " + std::to_string(iter);
            return out;
        }
        if (!r.gamma.is_real() || !lowers_filtration(r.gamma, w, 1) ||
            !mhs.gl().in_part(r.lambda, GlBigrading::Part::Lambda) ||
            !preserves(r.phi, mhs.hodge_filtration()) || !lowers_filtration(r.phi, w, 1)) {
            out.pass = false;
            out.detail = "membership certificate failed at instance " + std::to_string(iter);
            return out;
        }
        for (const Matrix& d : first_order_defect(r, alpha, mhs))
            if (!lowers_filtration(d, w, 2)) {
                out.pass = false;
                out.detail = "first-order defect outside Lie_{-2} at instance " +
                             std::to_string(iter);
                return out;
            }
    }

    // the dim-3 worked example, exact
    Vec plus{Scalar(0), Scalar(1), Scalar::i()};
    Vec e1{Scalar(1), Scalar(0), Scalar(0)};
    IncreasingFiltration w3(3, {{0, Subspace::line(e1)}, {1, Subspace::full(3)}});
    DecreasingFiltration f3(3, {{1, Subspace::line(plus)}, {2, Subspace::zero(3)}});
    const auto mhs3 = MixedHodgeStructure::build(f3, w3);
    Matrix alpha(3, 3);
    alpha.at(0, 1) = Scalar(Rational(1, 2));
    alpha.at(0, 2) = Scalar(Rational(0), Rational(-1, 2));
    const auto r3 = exp_triple_factorization(alpha, mhs3);
    if (r3.gamma != alpha + alpha.conj() || !r3.lambda.is_zero() ||
        r3.phi != -alpha.conj()) {
        out.pass = false;
        out.detail = "dim-3 worked example mismatch";
        return out;
    }
    out.detail = "200 factorizations + worked example";
    return out;
}

Outcome criterion4() {
    Outcome out;
    Rng rng(10004);
    int perturbed_runs = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const auto data = mhx_test::random_grading_instance(rng);
        const auto& gi = data.instance;
        const auto r1 = deligne_grading(gi.n, gi.rel_y, gi.w);
        if (!r1.certificate()) {
            out.pass = false;
            out.detail = "certificate failed at instance " + std::to_string(iter);
            return out;
        }
        const auto y0b = mhx_test::perturbed_initial_grading(rng, data);
        if (y0b) {
            ++perturbed_runs;
            const auto r2 = deligne_grading(gi.n, gi.rel_y, gi.w, *y0b);
            if (r2.y != r1.y) {
                out.pass = false;
                out.detail = "initializations disagree at instance " + std::to_string(iter);
                return out;
            }
        }
        // commutativity remark for the associated triple
        const std::size_t n = gi.w.ambient();
        const Matrix n0 = r1.components.count(0) ? r1.components.at(0) : Matrix(n, n);
        const Matrix hrel = gi.rel_y.as_operator() - r1.y.as_operator();
        const Matrix n0plus = sl2_complete(n0, hrel);
        if (!bracket(gi.n - n0, n0plus).is_zero()) {
            out.pass = false;
            out.detail = "[N - N0, N0+] != 0 at instance " + std::to_string(iter);
            return out;
        }
    }
    out.detail = "100 instances, " + std::to_string(perturbed_runs) + " double runs";
    return out;
}

struct OrbitCorpus {
    std::vector<NilpotentOrbit> orbits;
    int deep_extensions = 0;  // instances with components of degree >= 3
};

OrbitCorpus split_corpus() {
    OrbitCorpus corpus;
    Rng rng(10005);
    for (int iter = 0; iter < 50; ++iter) {
        const auto spec = mhx_test::random_orbit_spec(rng, 20000 + static_cast<unsigned long>(iter));
        corpus.orbits.push_back(generate_split_orbit(spec));
        if (spec.extensions.count(3)) ++corpus.deep_extensions;
    }
    return corpus;
}

Outcome criterion5(const OrbitCorpus& corpus) {
    Outcome out;
    const std::vector<long> ys = {1, 2, 3, 5};
    for (std::size_t i = 0; i < corpus.orbits.size(); ++i) {
        const auto& orbit = corpus.orbits[i];
        const Grading y = y_of_triple(orbit.f, orbit.w, orbit.n);
        const Matrix n0 = y.ad_component(orbit.n, 0);
        for (long yy : ys) {
            const auto pair = flowed_grading_pair(orbit.f, orbit.w, orbit.n, Rational(yy));
            if (!pair.equal) {
                out.pass = false;
                out.detail = "flow identity failed at orbit " + std::to_string(i) +
                             ", y=" + std::to_string(yy);
                return out;
            }
            const Scalar iy(Rational(0), Rational(yy));
            const Matrix g = exp_nilpotent(iy * orbit.n) * exp_nilpotent(-(iy * n0));
            const auto base = MixedHodgeStructure::build(
                orbit.f.image_under(exp_nilpotent(iy * n0)), orbit.w);
            if (!base.gl().in_part(log_unipotent(g), GlBigrading::Part::Lambda)) {
                out.pass = false;
                out.detail = "(*) membership failed at orbit " + std::to_string(i) +
                             ", y=" + std::to_string(yy);
                return out;
            }
        }
    }
    out.detail = std::to_string(corpus.orbits.size()) + " orbits (" +
                 std::to_string(corpus.deep_extensions) + " with k=3 data), y in {1,2,3,5}";
    return out;
}

Outcome criterion6(const OrbitCorpus& corpus) {
    Outcome out;
    for (std::size_t i = 0; i < corpus.orbits.size(); ++i) {
        const auto& orbit = corpus.orbits[i];
        const Grading y = y_of_triple(orbit.f, orbit.w, orbit.n);
        if (!y.is_real()) {
            out.pass = false;
            out.detail = "limiting grading not real at orbit " + std::to_string(i);
            return out;
        }
        const auto rep = sl2_structure_report(orbit, y);
        if (!rep.all_checks()) {
            out.pass = false;
            out.detail = "structure checks failed at orbit " + std::to_string(i);
            return out;
        }
    }
    out.detail = std::to_string(corpus.orbits.size()) + " orbits, all flags exact";
    return out;
}

Outcome criterion7(const OrbitCorpus& corpus) {
    Outcome out;
    int positives = 0, negatives = 0;
    auto check_agreement = [&](const NilpotentOrbit& orbit, bool expect_positive,
                               const std::string& label) -> bool {
        const auto rep = split_admissibility(orbit);
        if (rep.split_verdict_direct() != rep.split_verdict_limit()) {
            out.pass = false;
            out.detail = "routes disagree on " + label;
            return false;
        }
        if (rep.split_verdict_direct() != expect_positive) {
            out.pass = false;
            out.detail = label + " classified " +
                         (rep.split_verdict_direct() ? "positive" : "negative") +
                         ", expected otherwise";
            return false;
        }
        (expect_positive ? positives : negatives) += 1;
        return true;
    };

    for (std::size_t i = 0; i < corpus.orbits.size(); ++i)
        if (!check_agreement(corpus.orbits[i], true, "positive " + std::to_string(i)))
            return out;

    // negatives: lambda-twisted non-split variants
    Rng rng(10007);
    int made = 0;
    for (std::size_t i = 0; i < corpus.orbits.size() && made < 8; ++i) {
        const auto& orbit = corpus.orbits[i];
        if (orbit.n.is_zero()) continue;
        NilpotentOrbit twisted = orbit;
        Rational c(rng.uniform(1, 3), 2);
        c.canonicalize();
        twisted.f = orbit.f.image_under(exp_nilpotent(Scalar(Rational(0), c) * orbit.n));
        const auto probe = split_admissibility(twisted);
        if (probe.split_verdict_direct()) continue;  // unlucky twist kept it split
        if (!check_agreement(twisted, false, "nonsplit twist " + std::to_string(i))) return out;
        ++made;
    }
    // negatives: broken horizontality (tower with a swapped Hodge step)
    {
        Vec e1{Scalar(1), Scalar(0), Scalar(0)};
        Vec e2{Scalar(0), Scalar(1), Scalar(0)};
        Vec e3{Scalar(0), Scalar(0), Scalar(1)};
        for (int variant = 0; variant < 6; ++variant) {
            NilpotentOrbit broken;
            broken.n = Matrix(3, 3);
            broken.n.at(0, 1) = Scalar(1);
            broken.n.at(1, 2) = Scalar(1);
            broken.w = IncreasingFiltration(
                3, {{0, Subspace::line(e1)},
                    {2, Subspace::span({e1, e2}, 3)},
                    {4, Subspace::full(3)}});
            const Vec top = variant % 2 ? e3 : e3 + Vec{Scalar(variant), Scalar(0), Scalar(0)};
            broken.f = DecreasingFiltration(
                3, {{1, Subspace::span({top, e1}, 3)},  // N F^2 escapes F^1
                    {2, Subspace::line(top)},
                    {3, Subspace::zero(3)}});
            if (!check_agreement(broken, false, "broken horizontality " + std::to_string(variant)))
                return out;
        }
    }
    // negatives: relative weight filtration fails to exist
    {
        for (int variant = 0; variant < 6; ++variant) {
            // dim-3 pattern with an extra Tate line at weight 2*variant
            const std::size_t n = 4;
            auto unit = [&](std::size_t i) {
                Vec v(n);
                v[i] = Scalar(1);
                return v;
            };
            NilpotentOrbit bad;
            bad.n = Matrix(n, n);
            bad.n.at(0, 1) = Scalar(1);
            std::map<int, Subspace> wsteps;
            wsteps.emplace(0, Subspace::span({unit(0), unit(3)}, n));
            wsteps.emplace(1, Subspace::full(n));
            bad.w = IncreasingFiltration(n, wsteps);
            std::map<int, Subspace> fsteps;
            Vec pair = unit(1) + Scalar::i() * unit(2);
            fsteps.emplace(1, Subspace::line(pair));
            fsteps.emplace(2, Subspace::zero(n));
            bad.f = DecreasingFiltration(n, fsteps);
            // vary by a real change of frame fixing the structure
            Matrix g = Matrix::identity(n);
            g.at(3, 0) = Scalar(variant);
            bad.f = bad.f.image_under(g);
            bad.w = bad.w.image_under(g);
            bad.n = g * bad.n * *inverse(g);
            if (!check_agreement(bad, false, "no-relW " + std::to_string(variant))) return out;
        }
    }
    if (negatives < 20) {
        out.pass = false;
        out.detail = "only " + std::to_string(negatives) + " negatives constructed";
        return out;
    }
    out.detail = std::to_string(positives) + " positives + " + std::to_string(negatives) +
                 " negatives, routes agree";
    return out;
}

Outcome criterion8() {
    Outcome out;
    Rng rng(10008);
    const std::vector<Rational> ys = {Rational(2), Rational(4), Rational(8), Rational(16)};
    int convergent = 0, divergent = 0;
    for (int iter = 0; iter < 50; ++iter) {
        const bool admissible = iter % 2 == 0;
        const auto um = mhx_test::random_unipotent_model(rng, admissible);
        const auto verdict = unipotent_admissibility(um.model);
        if (verdict.admissible() != admissible) {
            out.pass = false;
            out.detail = "verdict mismatch at model " + std::to_string(iter);
            return out;
        }
        const auto trace = grading_trace(um.model, ys, TraceMode::Float);
        if (trace.bounded != admissible) {
            out.pass = false;
            out.detail = "trace trend disagrees with the verdict at model " +
                         std::to_string(iter);
            return out;
        }
        if (admissible) {
            if (!trace.converged) {
                out.pass = false;
                out.detail = "convergent model missed the 1e-6 target at model " +
                             std::to_string(iter);
                return out;
            }
            ++convergent;
        } else {
            // divergent: norm doubling across all consecutive samples
            for (std::size_t s = 1; s < trace.samples.size(); ++s)
                if (trace.samples[s].norm < 2.0 * trace.samples[s - 1].norm) {
                    out.pass = false;
                    out.detail = "divergent model without norm doubling at model " +
                                 std::to_string(iter);
                    return out;
                }
            ++divergent;
        }
    }
    out.detail = std::to_string(convergent) + " convergent + " + std::to_string(divergent) +
                 " divergent models, classification consistent";
    return out;
}

Outcome criterion9() {
    Outcome out;
    std::vector<std::string> mismatches;
    // irreducibles d = 0..6, every weight pair
    for (int d = 0; d <= 6; ++d) {
        const std::size_t m = static_cast<std::size_t>(d) + 1;
        Matrix n(m, m), h(m, m), np(m, m);
        for (std::size_t p = 0; p < m; ++p) {
            h.at(p, p) = Scalar(Rational(2 * static_cast<long>(p) - d));
            if (p > 0) n.at(p - 1, p) = Scalar(Rational(static_cast<long>(p)));
            if (p + 1 < m) np.at(p + 1, p) = Scalar(Rational(d - static_cast<long>(p)));
        }
        const Sl2Rep rep = Sl2Rep::make(n, h, np);
        for (int a = -d; a <= d; ++a)
            for (int b = -d; b <= d; ++b) {
                const bool predicate = sinc_weight_overlap(rep, a, b);
                const bool oracle = sinc_weight_overlap_oracle(d, a, b);
                const bool stated = sinc_weight_overlap_stated({d}, a, b);
                if (predicate != oracle) {
                    out.pass = false;
                    out.detail = "predicate/oracle mismatch at d=" + std::to_string(d);
                    return out;
                }
                if (predicate != stated)
                    mismatches.push_back("(d=" + std::to_string(d) + ",a=" + std::to_string(a) +
                                         ",b=" + std::to_string(b) + ")");
            }
    }
    // random direct sums, dim <= 12
    Rng rng(10009);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<int> content;
        std::size_t dim = 0;
        while (true) {
            const int d = rng.uniform(0, 5);
            if (dim + static_cast<std::size_t>(d) + 1 > 12) break;
            content.push_back(d);
            dim += static_cast<std::size_t>(d) + 1;
            if (rng.uniform(0, 2) == 0) break;
        }
        Matrix n(dim, dim), h(dim, dim), np(dim, dim);
        std::size_t base = 0;
        for (int d : content) {
            for (int p = 0; p <= d; ++p) {
                const std::size_t idx = base + static_cast<std::size_t>(p);
                h.at(idx, idx) = Scalar(Rational(2 * p - d));
                if (p > 0) n.at(idx - 1, idx) = Scalar(Rational(p));
                if (p < d) np.at(idx + 1, idx) = Scalar(Rational(d - p));
            }
            base += static_cast<std::size_t>(d) + 1;
        }
        const Sl2Rep rep = Sl2Rep::make(n, h, np);
        const int top = *std::max_element(content.begin(), content.end());
        for (int a = -top; a <= top; ++a)
            for (int b = -top; b <= top; ++b) {
                bool oracle = false;
                for (int d : content) oracle = oracle || sinc_weight_overlap_oracle(d, a, b);
                const bool predicate = sinc_weight_overlap(rep, a, b);
                const bool stated = sinc_weight_overlap_stated(content, a, b);
                if (predicate != oracle) {
                    out.pass = false;
                    out.detail = "predicate/oracle mismatch on a direct sum";
                    return out;
                }
                if (predicate != stated)
                    mismatches.push_back("(sum," + std::to_string(a) + "," + std::to_string(b) +
                                         ")");
            }
    }
    if (!mismatches.empty()) {
        out.pass = false;
        std::string joined;
        for (std::size_t i = 0; i < mismatches.size() && i < 6; ++i)
            joined += (i ? ", " : "") + mismatches[i];
        out.detail =
            "predicate = oracle everywhere, but the stated iff-characterization fails at " +
            std::to_string(mismatches.size()) + " middle-weight pairs [" + joined +
            (mismatches.size() > 6 ? ", ..." : "") +
            "]: the printed characterization misses an alternating-sign cancellation at b=0 "
            "(see the notes in the sl2 header); the exact routes are authoritative";
        return out;
    }
    out.detail = "predicate = oracle = stated characterization on all pairs";
    return out;
}

Outcome criterion10(double elapsed_so_far) {
    Outcome out;
    // full fixture suite through the command runner
    struct Expectation {
        const char* fixture;
        const char* command;
        int exit_code;
    };
    const std::vector<Expectation> expectations = {
        {"point.json", "bigrading", 0},       {"tate.json", "admissible", 0},
        {"tate.json", "theorem4", 0},         {"tate.json", "trace", 0},
        {"elliptic.json", "admissible", 0},   {"elliptic.json", "theorem4", 0},
        {"tate-nonsplit.json", "admissible", 0}, {"badrel.json", "relwfilt", 1},
        {"nonadmissible-unipotent.json", "admissible", 1},
        {"nonadmissible-unipotent.json", "trace", 0},
    };
    RunOptions options;
    options.ys = {Rational(1), Rational(2)};
    for (const auto& e : expectations) {
        const auto doc = load_fixture(e.fixture);
        const auto report = run(e.command, doc, options);
        if (report.exit_code != e.exit_code) {
            out.pass = false;
            out.detail = std::string(e.command) + " on " + e.fixture + " exited " +
                         std::to_string(report.exit_code) + ", expected " +
                         std::to_string(e.exit_code);
            return out;
        }
    }
    // generator smoke through the runner
    const auto gen = run_generate(parse_generator_spec("0,2", "", "", 7));
    if (gen.exit_code != 0) {
        out.pass = false;
        out.detail = "generator failed";
        return out;
    }
    if (elapsed_so_far > 120.0) {
        out.pass = false;
        out.detail = "suite exceeded the 2-minute budget: " + std::to_string(elapsed_so_far) +
                     " s";
        return out;
    }
    std::ostringstream detail;
    detail << "fixture suite green, total " << std::fixed << std::setprecision(1)
           << elapsed_so_far << " s < 120 s";
    out.detail = detail.str();
    return out;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto suite_start = Clock::now();
    std::vector<std::pair<std::string, Outcome>> results;
    double elapsed_total = 0.0;

    auto run_criterion = [&](const std::string& name, const std::function<Outcome()>& fn) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        elapsed_total = std::chrono::duration<double>(Clock::now() - suite_start).count();
        results.emplace_back(name, out);
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed
                  << std::setprecision(2) << out.seconds << " s)"
                  << (out.detail.empty() ? "" : ": " + out.detail) << "\n";
    };

    run_criterion("criterion 1: bigrading axioms on 200 structures (< 10 s)", [] {
        Outcome out = criterion1();
        return out;
    });
    // enforce the criterion-1 runtime target
    if (results.back().second.pass && results.back().second.seconds >= 10.0) {
        results.back().second.pass = false;
        std::cout << "[FAIL] criterion 1 runtime " << results.back().second.seconds
                  << " s exceeds 10 s\n";
    }
    run_criterion("criterion 2: weight filtrations (Jordan types + fixtures)", criterion2);
    run_criterion("criterion 3: triple factorization on 200 inputs + worked example",
                  criterion3);
    run_criterion("criterion 4: grading construction, uniqueness, commutativity remark",
                  criterion4);

    OrbitCorpus corpus;
    try {
        corpus = split_corpus();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] corpus generation: " << e.what() << "\n";
        return 1;
    }
    run_criterion("criterion 5: flow identity + Lambda membership at y in {1,2,3,5}",
                  [&] { return criterion5(corpus); });
    run_criterion("criterion 6: monodromy component structure on the corpus",
                  [&] { return criterion6(corpus); });
    run_criterion("criterion 7: two-route verdict agreement (50 positives, 20 negatives)",
                  [&] { return criterion7(corpus); });
    run_criterion("criterion 8: unipotent criterion vs float trace on 50 models", criterion8);
    run_criterion("criterion 9: sinc weight overlap (predicate/oracle/stated iff)", criterion9);
    run_criterion("criterion 10: fixture suite + generators under 2 minutes",
                  [&] { return criterion10(elapsed_total); });

    int failures = 0;
    for (const auto& [name, out] : results)
        if (!out.pass) ++failures;
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << " ("
              << std::fixed << std::setprecision(1)
              << std::chrono::duration<double>(Clock::now() - suite_start).count()
              << " s total)\n";
    return failures == 0 ? 0 : 1;
}
