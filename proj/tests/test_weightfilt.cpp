#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhx/weight_filtration.hpp"
#include "support/generators.hpp"

using namespace mhx;

namespace {

Vec e(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

/// Nilpotent with prescribed Jordan block sizes (shift maps e_{i+1} -> e_i
/// within each block).
Matrix jordan(const std::vector<std::size_t>& blocks) {
    std::size_t n = 0;
    for (std::size_t b : blocks) n += b;
    Matrix m(n, n);
    std::size_t base = 0;
    for (std::size_t b : blocks) {
        for (std::size_t j = 1; j < b; ++j) m.at(base + j - 1, base + j) = Scalar(1);
        base += b;
    }
    return m;
}

void check_defining_properties(const Matrix& n, const IncreasingFiltration& w) {
    CHECK(lowers_filtration(n, w, 2));
    const int top = w.highest();
    for (int l = 1; l <= top; ++l) {
        CHECK(w.at(l).dim() - w.at(l - 1).dim() == w.at(-l).dim() - w.at(-l - 1).dim());
        const Subspace mapped = w.at(l).image_under(n.pow(static_cast<std::size_t>(l)));
        CHECK(mapped.sum(w.at(-l - 1)) == w.at(-l));
    }
}

}  // namespace

TEST_CASE("monodromy weight filtration of basic nilpotents") {
    const IncreasingFiltration w0 = monodromy_weight(Matrix::zero(2));
    CHECK(w0.at(-1).is_zero());
    CHECK(w0.at(0).is_full());

    const IncreasingFiltration w2 = monodromy_weight(jordan({2}));
    CHECK(w2.at(-1) == Subspace::line(e(2, 0)));
    CHECK(w2.at(0) == Subspace::line(e(2, 0)));
    CHECK(w2.at(1).is_full());

    const IncreasingFiltration w3 = monodromy_weight(jordan({3}));
    CHECK(w3.at(-2) == Subspace::line(e(3, 0)));
    CHECK(w3.at(-1) == w3.at(-2));
    CHECK(w3.at(0).dim() == 2);
    CHECK(w3.at(1).dim() == 2);
    CHECK(w3.at(2).is_full());

    CHECK_THROWS_AS(monodromy_weight(Matrix::identity(2)), InputError);
}

TEST_CASE("monodromy weight filtration: all Jordan types up to dim 8") {
    // enumerate partitions of n
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cur;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left,
                                                                std::size_t maxp) {
            if (left == 0) {
                parts.push_back(cur);
                return;
            }
            for (std::size_t p = std::min(left, maxp); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p);
                cur.pop_back();
            }
        };
        rec(n, n);
        for (const auto& blocks : parts) {
            const Matrix m = jordan(blocks);
            check_defining_properties(m, monodromy_weight(m));
        }
    }
}

TEST_CASE("conjugation invariance of the monodromy filtration") {
    mhx_test::Rng rng(3);
    for (int iter = 0; iter < 15; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
        std::vector<std::size_t> blocks;
        std::size_t left = n;
        while (left > 0) {
            const std::size_t b = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(left)));
            blocks.push_back(b);
            left -= b;
        }
        const Matrix m = jordan(blocks);
        // random real invertible conjugation
        Matrix g = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rng.uniform(0, 2) == 0) g.at(i, j) = Scalar(rng.rational(2));
        if (!inverse(g)) continue;
        const Matrix gi = *inverse(g);
        const Matrix conj_m = g * m * gi;
        if (!is_nilpotent(conj_m)) continue;
        const IncreasingFiltration w = monodromy_weight(m);
        const IncreasingFiltration wc = monodromy_weight(conj_m);
        CHECK(wc == w.image_under(g));
    }
}

TEST_CASE("relative weight filtration on the documented instances") {
    Matrix n12 = Matrix::unit(2, 0, 1);
    // N = 0: rel W = W
    IncreasingFiltration w(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    auto r0 = relative_weight(Matrix::zero(2), w);
    REQUIRE(r0.exists);
    CHECK(*r0.filtration == w);

    // Tate: rel W = W
    auto rt = relative_weight(n12, w);
    REQUIRE(rt.exists);
    CHECK(*rt.filtration == w);

    // elliptic: rel W = W(N)[-1]
    IncreasingFiltration wp(2, {{1, Subspace::full(2)}});
    auto re = relative_weight(n12, wp);
    REQUIRE(re.exists);
    CHECK(*re.filtration == monodromy_weight(n12).shift(-1));

    // badrel: nonexistence with witness
    IncreasingFiltration wb(2, {{0, Subspace::line(e(2, 0))}, {1, Subspace::full(2)}});
    auto rb = relative_weight(n12, wb);
    CHECK(!rb.exists);
    CHECK(!rb.failure_witness.empty());
    CHECK(!rb.filtration.has_value());

    CHECK_THROWS_AS(relative_weight(Matrix::identity(2), w), InputError);
}

TEST_CASE("verify_rel checks both conditions and rejects shifts") {
    Matrix n12 = Matrix::unit(2, 0, 1);
    IncreasingFiltration w(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    CHECK(verify_rel(Matrix::zero(2), w, w));
    auto rt = relative_weight(n12, w);
    CHECK(verify_rel(n12, w, *rt.filtration));
    CHECK(!verify_rel(n12, w, rt.filtration->shift(1)));

    IncreasingFiltration wp(2, {{1, Subspace::full(2)}});
    auto re = relative_weight(n12, wp);
    CHECK(verify_rel(n12, wp, *re.filtration));
    CHECK(!verify_rel(n12, wp, re.filtration->shift(1)));
}

TEST_CASE("uniqueness: no other filtration passes verify_rel on small instances") {
    // On the Tate instance, try perturbing the middle step through every
    // line of C^2 spanned by small-integer vectors; only rel W itself passes.
    Matrix n12 = Matrix::unit(2, 0, 1);
    IncreasingFiltration w(2, {{0, Subspace::line(e(2, 0))}, {2, Subspace::full(2)}});
    const IncreasingFiltration correct = *relative_weight(n12, w).filtration;
    int passes = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            const Subspace line = Subspace::line(Vec{Scalar(a), Scalar(b)});
            for (int lo = -1; lo <= 1; ++lo) {
                std::map<int, Subspace> steps;
                steps.emplace(lo, line);
                steps.emplace(2, Subspace::full(2));
                IncreasingFiltration cand(2, std::move(steps));
                if (verify_rel(n12, w, cand)) {
                    ++passes;
                    CHECK(cand == correct);
                }
            }
        }
    CHECK(passes > 0);
}

TEST_CASE("trivial graded action: rel W exists iff N lowers W by 2") {
    mhx_test::Rng rng(77);
    for (int iter = 0; iter < 25; ++iter) {
        const auto um = mhx_test::random_unipotent_model(rng, iter % 2 == 0);
        const auto& orbit = um.model.orbit;
        const auto rel = relative_weight(orbit.n, orbit.w);
        CHECK(rel.exists == lowers_filtration(orbit.n, orbit.w, 2));
        if (rel.exists) CHECK(*rel.filtration == orbit.w);
    }
}

TEST_CASE("relative weight filtration on sl2-structured data") {
    mhx_test::Rng rng(121);
    for (int iter = 0; iter < 25; ++iter) {
        const auto data = mhx_test::random_grading_instance(rng);
        const auto rel = relative_weight(data.instance.n, data.instance.w);
        REQUIRE(rel.exists);
        CHECK(*rel.filtration == filtration_of(data.instance.rel_y));
    }
}
