#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhx/filtration.hpp"
#include "support/generators.hpp"

using namespace mhx;

namespace {
Vec e(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}
}  // namespace

TEST_CASE("filtration storage, clamping and shift") {
    IncreasingFiltration w(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    CHECK(w.at(-5).is_zero());
    CHECK(w.at(0).dim() == 1);
    CHECK(w.at(1).dim() == 1);
    CHECK(w.at(7).is_full());
    CHECK(shift(w, 0) == w);
    const IncreasingFiltration s = shift(w, -2);
    CHECK(s.at(2).dim() == 1);  // jump moved from 0 to 2
    CHECK(s.at(1).is_zero());
    CHECK(shift(shift(w, 3), -1) == shift(w, 2));

    CHECK_THROWS_AS(IncreasingFiltration(
                        2, {{0, Subspace::full(2)}, {1, Subspace::line(e(2, 0))}}),
                    InputError);
    CHECK_THROWS_AS(IncreasingFiltration(2, {{0, Subspace::line(e(2, 0))}}), InputError);

    DecreasingFiltration f(2, {{1, Subspace::line(e(2, 1))}, {2, Subspace::zero(2)}});
    CHECK(f.at(-3).is_full());
    CHECK(f.at(1).dim() == 1);
    CHECK(f.at(2).is_zero());
    CHECK_THROWS_AS(DecreasingFiltration(2, {{1, Subspace::line(e(2, 1))}}), InputError);
}

TEST_CASE("gradings: operator, filtration_of, grades") {
    Grading y(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::line(e(2, 1))}});
    CHECK(y.as_operator() == Matrix::diagonal({Scalar(0), Scalar(2)}));
    IncreasingFiltration w(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    CHECK(grades(y, w));
    CHECK(filtration_of(y) == w);

    // E_0 = span(e1+e2) does not grade the same W
    Vec diag{Scalar(1), Scalar(1)};
    Grading bad(2, {{0, Subspace::line(diag)}, {2, Subspace::line(e(2, 1))}});
    CHECK(!grades(bad, w));

    // degenerate eigenspaces rejected
    CHECK_THROWS_AS(Grading(2, {{0, Subspace::line(diag)}, {2, Subspace::line(diag)}}),
                    InputError);

    mhx_test::Rng rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        const auto data = mhx_test::random_grading_instance(rng);
        CHECK(grades(data.yinf, data.instance.w));
        CHECK(grades(data.instance.rel_y, filtration_of(data.instance.rel_y)));
    }
}

TEST_CASE("graded pieces and induced filtrations") {
    IncreasingFiltration w(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    const GradedPiece gr2 = graded_piece(w, 2);
    CHECK(gr2.dim() == 1);
    CHECK(graded_piece(w, 1).dim() == 0);
    CHECK(graded_piece(w, 5).dim() == 0);
    CHECK(gr2.projection * gr2.section == Matrix::identity(1));

    // with a grading, representatives are the eigenspace
    Grading y(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::line(e(2, 1))}});
    CHECK(graded_piece(w, 2, y).representatives == Subspace::line(e(2, 1)));
    Grading ybad(2, {{0, Subspace::line(Vec{Scalar(1), Scalar(1)})},
                     {2, Subspace::line(e(2, 1))}});
    CHECK_THROWS_AS(graded_piece(w, 2, ybad), InputError);

    // induced Hodge filtration on Gr_2: F^1 = span(e2 + i e1)
    Vec mixed{Scalar::i(), Scalar(1)};
    DecreasingFiltration f(2, {{1, Subspace::line(mixed)}, {2, Subspace::zero(2)}});
    const DecreasingFiltration ind = induce_on_graded(f, w, 2);
    CHECK(ind.at(1).is_full());  // image of e2 + i e1 is the e2-class
    CHECK(ind.at(2).is_zero());

    // trivial filtration induces trivially
    DecreasingFiltration triv = DecreasingFiltration::trivial(2, 0);
    const DecreasingFiltration ind2 = induce_on_graded(triv, w, 2);
    CHECK(ind2.at(0).is_full());
    CHECK(ind2.at(1).is_zero());
}

TEST_CASE("dimension bookkeeping across graded pieces") {
    mhx_test::Rng rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        const auto data = mhx_test::random_mhs(rng, 6);
        const auto& f = data.mhs.hodge_filtration();
        const auto& w = data.mhs.weight_filtration();
        for (int p = f.lowest(); p <= f.highest() + 1; ++p) {
            std::size_t total = 0;
            for (int k = w.lowest(); k <= w.highest(); ++k) {
                if (w.at(k).dim() == w.at(k - 1).dim()) continue;
                const auto piece = graded_piece(w, k);
                const auto ind = induce_on_graded(f, w, piece);
                total += ind.at(p).dim();
                // monotone in p and exhausts the piece at the bottom index
                CHECK(ind.at(p).contains(ind.at(p + 1)));
                CHECK(ind.at(f.lowest()).is_full());
            }
            // sum over k of dim F^p Gr_k telescopes to the expected total
            std::size_t expect = 0;
            for (int k = w.lowest(); k <= w.highest(); ++k) {
                const Subspace cut = f.at(p).intersect(w.at(k));
                const Subspace cut1 = f.at(p).intersect(w.at(k - 1));
                expect += cut.dim() - cut1.dim();
            }
            CHECK(total == expect);
        }
    }
}

TEST_CASE("grades/filtration_of round trip on random gradings") {
    mhx_test::Rng rng(13);
    for (int iter = 0; iter < 25; ++iter) {
        const auto data = mhx_test::random_grading_instance(rng);
        const Grading& y = data.yinf;
        CHECK(grades(y, filtration_of(y)));
        for (int k = data.instance.w.lowest(); k <= data.instance.w.highest(); ++k) {
            const long diff = static_cast<long>(data.instance.w.at(k).dim()) -
                              static_cast<long>(data.instance.w.at(k - 1).dim());
            CHECK(diff >= 0);
        }
    }
}
