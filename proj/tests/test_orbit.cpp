#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhx/nilpotent.hpp"
#include "mhx/orbit.hpp"
#include "support/generators.hpp"

using namespace mhx;

namespace {

Vec e(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

NilpotentOrbit tate_orbit() {
    NilpotentOrbit o;
    o.n = Matrix::unit(2, 0, 1);
    o.w = IncreasingFiltration(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    o.f = DecreasingFiltration(2, {{1, Subspace::line(e(2, 1))}, {2, Subspace::zero(2)}});
    return o;
}

NilpotentOrbit elliptic_orbit() {
    NilpotentOrbit o = tate_orbit();
    o.w = IncreasingFiltration(2, {{1, Subspace::full(2)}});
    return o;
}

const std::vector<Rational> kYs = {Rational(1), Rational(2), Rational(4)};

}  // namespace

TEST_CASE("check_orbit on the standard fixtures") {
    CHECK(check_orbit(tate_orbit(), kYs).pass());
    CHECK(check_orbit(elliptic_orbit(), kYs).pass());

    // horizontality failure: F^1 = span(e1) with the weights of the elliptic
    // orbit makes (e^{iyN}F, W) fail membership, and a dim-3 tower breaks
    // horizontality outright
    NilpotentOrbit broken;
    broken.n = Matrix(3, 3);
    broken.n.at(0, 1) = Scalar(1);
    broken.n.at(1, 2) = Scalar(1);
    broken.w = IncreasingFiltration(
        3, {{0, Subspace::line(e(3, 0))},
            {2, Subspace::span({e(3, 0), e(3, 1)}, 3)},
            {4, Subspace::full(3)}});
    broken.f = DecreasingFiltration(
        3, {{1, Subspace::span({e(3, 2), e(3, 0)}, 3)},  // N F^2 not inside F^1
            {2, Subspace::line(e(3, 2))},
            {3, Subspace::zero(3)}});
    const auto rep = check_orbit(broken, kYs);
    CHECK(!rep.horizontal);
    CHECK(!rep.pass());
}

TEST_CASE("split admissibility on the named instances") {
    const auto rt = split_admissibility(tate_orbit());
    CHECK(rt.admissible());
    CHECK(rt.is_split);
    CHECK(rt.split_verdict_direct());
    CHECK(rt.split_verdict_limit());
    CHECK(rt.y_infty->as_operator() == Matrix::diagonal({Scalar(0), Scalar(2)}));
    CHECK(rt.y_infty_real);

    const auto re = split_admissibility(elliptic_orbit());
    CHECK(re.split_verdict_direct());
    CHECK(re.y_infty->as_operator() == Matrix::identity(2));

    // non-split Tate-like orbit: admissible but not split; the transported
    // grading is constant yet fails reality
    NilpotentOrbit ns = tate_orbit();
    ns.f = DecreasingFiltration(
        2, {{1, Subspace::line(Vec{Scalar::i(), Scalar(1)})}, {2, Subspace::zero(2)}});
    const auto rns = split_admissibility(ns);
    CHECK(rns.admissible());
    CHECK(!rns.is_split);
    CHECK(rns.limit_constant);
    CHECK(!rns.limit_real);
    CHECK(!rns.split_verdict_direct());
    CHECK(!rns.split_verdict_limit());
}

TEST_CASE("sl2 structure reports on the fixtures") {
    const auto rt = split_admissibility(tate_orbit());
    REQUIRE(rt.sl2_structure.has_value());
    CHECK(rt.sl2_structure->all_checks());
    CHECK(rt.sl2_structure->components.count(2) == 1);
    CHECK(rt.sl2_structure->components.count(0) == 0);

    const auto re = split_admissibility(elliptic_orbit());
    REQUIRE(re.sl2_structure.has_value());
    CHECK(re.sl2_structure->all_checks());
    CHECK(re.sl2_structure->components.count(0) == 1);
}

TEST_CASE("generator: pinned families") {
    // weights {0,2}, trivial content, one generator: the Tate family
    GeneratorSpec tate_spec;
    tate_spec.content[0] = {GeneratorIrrep{0, 1, 0}};
    tate_spec.content[2] = {GeneratorIrrep{0, 1, 0}};
    tate_spec.extensions[2] = 1;
    tate_spec.seed = 7;
    const auto orbit = generate_split_orbit(tate_spec);
    CHECK(orbit.w.ambient() == 2);
    CHECK(!orbit.n.is_zero());
    CHECK(lowers_filtration(orbit.n, orbit.w, 2));

    // single weight-1 irreducible of highest weight 1: the elliptic orbit
    GeneratorSpec ell_spec;
    ell_spec.content[1] = {GeneratorIrrep{1, 1, 0}};
    const auto ell = generate_split_orbit(ell_spec);
    CHECK(ell.w.ambient() == 2);
    const auto verdict = split_admissibility(ell);
    CHECK(verdict.split_verdict_direct());

    // infeasible extension request is reported
    GeneratorSpec bad;
    bad.content[0] = {GeneratorIrrep{0, 1, 0}};
    bad.extensions[2] = 1;
    CHECK_THROWS_AS(generate_split_orbit(bad), InputError);
}

TEST_CASE("generated corpus: verdicts, structure reports, flow identity") {
    mhx_test::Rng rng(501);
    for (int iter = 0; iter < 8; ++iter) {
        const auto spec = mhx_test::random_orbit_spec(rng, 7000 + static_cast<unsigned long>(iter));
        const auto orbit = generate_split_orbit(spec);
        const auto rep = split_admissibility(orbit);
        CHECK(rep.split_verdict_direct());
        CHECK(rep.split_verdict_limit());
        REQUIRE(rep.sl2_structure.has_value());
        CHECK(rep.sl2_structure->all_checks());
        // transported grading is y-independent across the samples
        CHECK(rep.limit_constant);
    }
}

TEST_CASE("unipotent admissibility and its obstruction") {
    // Tate as a model with a Gamma term: still admissible
    PeriodMapModel good{tate_orbit(), {{1, Matrix::unit(2, 0, 1)}}};
    const auto rg = unipotent_admissibility(good);
    CHECK(rg.admissible());
    CHECK(rg.y_infty->as_operator() == Matrix::diagonal({Scalar(0), Scalar(2)}));
    CHECK(rg.obstruction->is_zero());

    // the dim-3 obstruction fixture
    NilpotentOrbit bad;
    bad.n = Matrix(3, 3);
    bad.n.at(0, 1) = Scalar(1);
    bad.w = IncreasingFiltration(3, {{0, Subspace::line(e(3, 0))}, {1, Subspace::full(3)}});
    bad.f = DecreasingFiltration(
        3, {{1, Subspace::line(Vec{Scalar(0), Scalar(1), Scalar::i()})},
            {2, Subspace::zero(3)}});
    const auto rb = unipotent_admissibility(PeriodMapModel{bad, {}});
    CHECK(!rb.admissible());
    REQUIRE(rb.obstruction.has_value());
    CHECK(!rb.obstruction->is_zero());

    // a non-unipotent model is rejected
    CHECK_THROWS_AS(unipotent_admissibility(PeriodMapModel{elliptic_orbit(), {}}), InputError);
}

TEST_CASE("unipotent criterion is a biconditional against the float trace") {
    mhx_test::Rng rng(621);
    const std::vector<Rational> ys = {Rational(2), Rational(4), Rational(8), Rational(16)};
    for (int iter = 0; iter < 10; ++iter) {
        const auto um = mhx_test::random_unipotent_model(rng, iter % 2 == 0);
        const auto verdict = unipotent_admissibility(um.model);
        CHECK(verdict.admissible() == um.admissible);
        const auto trace = grading_trace(um.model, ys, TraceMode::Float);
        CHECK(trace.bounded == um.admissible);
        if (um.admissible) CHECK(trace.converged);
    }
}

TEST_CASE("exact decoupled traces are exactly constant on split orbits") {
    PeriodMapModel pm{tate_orbit(), {}};
    const auto tr = grading_trace(pm, kYs, TraceMode::ExactDecoupled);
    for (const auto& s : tr.samples) {
        CHECK(s.valid);
        CHECK(s.distance == 0.0);
    }
    // with a Gamma coefficient and a nonzero rational s the algebraic
    // evaluation still produces a valid grading at every sample
    PeriodMapModel pg{tate_orbit(), {{1, Matrix::unit(2, 0, 1)}}};
    const auto tg = grading_trace(pg, kYs, TraceMode::ExactDecoupled, Rational(1, 3));
    for (const auto& s : tg.samples) CHECK(s.valid);

    // the non-split Tate-like orbit has an exactly constant, non-real trace:
    // its distance to the prediction is identically zero
    NilpotentOrbit ns = tate_orbit();
    ns.f = DecreasingFiltration(
        2, {{1, Subspace::line(Vec{Scalar::i(), Scalar(1)})}, {2, Subspace::zero(2)}});
    const auto tns = grading_trace(PeriodMapModel{ns, {}}, kYs, TraceMode::ExactDecoupled);
    for (const auto& s : tns.samples) {
        CHECK(s.valid);
        CHECK(s.distance == 0.0);
    }
    const auto tnf = grading_trace(PeriodMapModel{ns, {}},
                                   {Rational(2), Rational(4), Rational(8), Rational(16)},
                                   TraceMode::Float);
    CHECK(tnf.bounded);
    for (const auto& s : tnf.samples) CHECK(s.distance < 1e-8);
}

TEST_CASE("route agreement on constructed negatives") {
    mhx_test::Rng rng(881);
    int negatives = 0;
    // lambda-twisted non-split variants of generated orbits
    for (int iter = 0; iter < 4; ++iter) {
        const auto spec = mhx_test::random_orbit_spec(rng, 300 + static_cast<unsigned long>(iter));
        const auto orbit = generate_split_orbit(spec);
        if (orbit.n.is_zero()) continue;
        NilpotentOrbit twisted = orbit;
        const Scalar ic(Rational(0), Rational(1, 2));
        twisted.f = orbit.f.image_under(exp_nilpotent(ic * orbit.n));
        const auto rep = split_admissibility(twisted);
        CHECK(rep.split_verdict_direct() == rep.split_verdict_limit());
        if (!rep.split_verdict_direct()) ++negatives;
    }
    CHECK(negatives > 0);
}
