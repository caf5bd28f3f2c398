#include <random>

#include "mhx/nilpotent.hpp"
#include "mhx/orbit.hpp"

namespace mhx {

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
int ceil_div2(int x) { return floor_div2(x + 1); }

/// Deterministic basis layout for a generator spec: per weight, per irrep,
/// chains of length d+1 (one real chain for Tate-type content, a pair of
/// chains otherwise).
struct Layout {
    struct Chain {
        int weight = 0;
        int d = 0;
        int twist = 0;
        bool paired = false;
        std::size_t first = 0;  // base index; paired chains occupy 2(d+1) slots
    };
    std::vector<Chain> chains;
    std::size_t dim = 0;
    std::map<int, std::vector<std::size_t>> weight_indices;  // W-weight -> basis slots
};

Layout layout_of(const GeneratorSpec& spec) {
    Layout layout;
    if (spec.content.empty()) throw InputError("generator: empty content");
    for (const auto& [k, irreps] : spec.content) {
        if (irreps.empty())
            throw InputError("generator: weight " + std::to_string(k) + " has no content");
        for (const GeneratorIrrep& irrep : irreps) {
            if (irrep.d < 0 || irrep.count < 1) throw InputError("generator: bad irrep data");
            const bool paired = irrep.twist != 0 || ((k + irrep.d) % 2 + 2) % 2 == 1;
            for (int c = 0; c < irrep.count; ++c) {
                Layout::Chain chain;
                chain.weight = k;
                chain.d = irrep.d;
                chain.twist = irrep.twist;
                chain.paired = paired;
                chain.first = layout.dim;
                const std::size_t len = static_cast<std::size_t>(irrep.d + 1) * (paired ? 2 : 1);
                for (std::size_t t = 0; t < len; ++t)
                    layout.weight_indices[k].push_back(layout.dim + t);
                layout.dim += len;
                layout.chains.push_back(chain);
            }
        }
    }
    return layout;
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

}  // namespace

Grading generator_grading(const GeneratorSpec& spec) {
    const Layout layout = layout_of(spec);
    std::map<int, Subspace> spaces;
    for (const auto& [k, idx] : layout.weight_indices) {
        std::vector<Vec> gens;
        for (std::size_t i : idx) gens.push_back(unit_vec(layout.dim, i));
        spaces.emplace(k, Subspace::span(gens, layout.dim));
    }
    return Grading(layout.dim, std::move(spaces));
}

NilpotentOrbit generate_split_orbit(const GeneratorSpec& spec) {
    const Layout layout = layout_of(spec);
    const std::size_t n = layout.dim;

    Matrix n0(n, n), h(n, n), nplus(n, n);
    std::map<std::pair<int, int>, std::vector<Vec>> piece_gens;

    for (const Layout::Chain& chain : layout.chains) {
        const int d = chain.d, k = chain.weight;
        auto slot = [&](int j, bool primed) {
            return chain.first + static_cast<std::size_t>(j) +
                   (primed ? static_cast<std::size_t>(d + 1) : 0);
        };
        for (int j = 0; j <= d; ++j) {
            const int wj = k + 2 * j - d;  // relative weight of the chain vector
            const Scalar hval(Rational(2 * j - d));
            h.at(slot(j, false), slot(j, false)) = hval;
            if (j > 0) n0.at(slot(j - 1, false), slot(j, false)) = Scalar(1);
            if (j < d)
                nplus.at(slot(j + 1, false), slot(j, false)) =
                    Scalar(Rational(static_cast<long>(j + 1) * (d - j)));
            if (!chain.paired) {
                const int p = wj / 2;
                piece_gens[{p, p}].push_back(unit_vec(n, slot(j, false)));
            } else {
                h.at(slot(j, true), slot(j, true)) = hval;
                if (j > 0) n0.at(slot(j - 1, true), slot(j, true)) = Scalar(1);
                if (j < d)
                    nplus.at(slot(j + 1, true), slot(j, true)) =
                        Scalar(Rational(static_cast<long>(j + 1) * (d - j)));
                const int p = ceil_div2(wj) + chain.twist;
                const int q = wj - p;
                Vec plus(n), minus(n);
                plus[slot(j, false)] = Scalar(1);
                plus[slot(j, true)] = Scalar::i();
                minus[slot(j, false)] = Scalar(1);
                minus[slot(j, true)] = -Scalar::i();
                piece_gens[{p, q}].push_back(std::move(plus));
                piece_gens[{q, p}].push_back(std::move(minus));
            }
        }
    }

    // Hodge filtration from the split bigrading; weight filtration from the
    // block grading.
    int pmin = 0, pmax = 0;
    bool first_piece = true;
    for (const auto& [type, gens] : piece_gens) {
        if (first_piece) {
            pmin = pmax = type.first;
            first_piece = false;
        }
        pmin = std::min(pmin, type.first);
        pmax = std::max(pmax, type.first);
    }
    std::map<int, Subspace> fsteps;
    for (int p = pmin; p <= pmax + 1; ++p) {
        std::vector<Vec> gens;
        for (const auto& [type, vecs] : piece_gens)
            if (type.first >= p) gens.insert(gens.end(), vecs.begin(), vecs.end());
        fsteps.emplace(p, Subspace::span(gens, n));
    }
    DecreasingFiltration f(n, std::move(fsteps));
    const Grading yinf = generator_grading(spec);
    const IncreasingFiltration w = filtration_of(yinf);

    // Extension components: real highest-weight vectors of ad-degree -k that
    // shift every bigrading piece by (-1,-1).
    Matrix total_n = n0;
    std::mt19937_64 rng(spec.seed);
    std::vector<int> block_weight(n, 0);
    for (const auto& [k, idx] : layout.weight_indices)
        for (std::size_t i : idx) block_weight[i] = k;

    for (const auto& [k, count] : spec.extensions) {
        if (k < 2) throw InputError("generator: extension degree must be >= 2");
        // Unknown entries: (i, j) with weight(i) - weight(j) = -k.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (block_weight[i] - block_weight[j] == -k) slots.emplace_back(i, j);
        if (slots.empty())
            throw InputError("generator: no slots of degree -" + std::to_string(k));

        auto realize = [&](const Vec& coeffs) {
            Matrix x(n, n);
            for (std::size_t t = 0; t < slots.size(); ++t)
                x.at(slots[t].first, slots[t].second) = coeffs[t];
            return x;
        };

        // Constraints: [nplus, X] = 0 and X(I^{p,q}) <= I^{p-1,q-1}, with
        // real and imaginary parts stacked so the kernel basis stays real.
        std::vector<Vec> rows;
        auto add_constraint_rows = [&](const std::vector<Vec>& complex_rows) {
            for (const Vec& cr : complex_rows) {
                Vec re(slots.size()), im(slots.size());
                bool has_re = false, has_im = false;
                for (std::size_t t = 0; t < slots.size(); ++t) {
                    re[t] = Scalar(cr[t].re);
                    im[t] = Scalar(cr[t].im);
                    has_re = has_re || !re[t].is_zero();
                    has_im = has_im || !im[t].is_zero();
                }
                if (has_re) rows.push_back(std::move(re));
                if (has_im) rows.push_back(std::move(im));
            }
        };
        // Rows indexed by bracket entries and by type-shift annihilator dots.
        std::vector<Vec> complex_rows;
        {
            const std::size_t nn = n * n;
            // bracket rows: vec([nplus, X]) = 0
            std::vector<Vec> bracket_cols(slots.size());
            for (std::size_t t = 0; t < slots.size(); ++t) {
                Vec unit(slots.size());
                unit[t] = Scalar(1);
                bracket_cols[t] = bracket(nplus, realize(unit)).vectorize();
            }
            for (std::size_t r = 0; r < nn; ++r) {
                Vec row(slots.size());
                bool nonzero = false;
                for (std::size_t t = 0; t < slots.size(); ++t) {
                    row[t] = bracket_cols[t][r];
                    nonzero = nonzero || !row[t].is_zero();
                }
                if (nonzero) complex_rows.push_back(std::move(row));
            }
            // type rows: for each piece basis vector v and annihilator row a
            // of the target piece, a . (X v) = 0.
            for (const auto& [type, vecs] : piece_gens) {
                auto it = piece_gens.find({type.first - 1, type.second - 1});
                Subspace target = it == piece_gens.end()
                                      ? Subspace::zero(n)
                                      : Subspace::span(it->second, n);
                const Matrix ann = target.annihilator();
                for (const Vec& v : vecs)
                    for (std::size_t r = 0; r < ann.rows(); ++r) {
                        Vec row(slots.size());
                        bool nonzero = false;
                        for (std::size_t t = 0; t < slots.size(); ++t) {
                            const auto& [i, j] = slots[t];
                            // (a . X v) coefficient of slot (i,j): a_i * v_j
                            row[t] = ann.at(r, i) * v[j];
                            nonzero = nonzero || !row[t].is_zero();
                        }
                        if (nonzero) complex_rows.push_back(std::move(row));
                    }
            }
        }
        add_constraint_rows(complex_rows);

        const Subspace solution = kernel(Matrix::from_rows(rows, slots.size()));
        if (solution.is_zero())
            throw InputError("generator: no highest-weight extension of degree " +
                             std::to_string(k) + " exists for this content");

        std::uniform_int_distribution<int> dist(-3, 3);
        for (int c = 0; c < count; ++c) {
            Vec coeffs(slots.size());
            bool nonzero = false;
            for (int attempt = 0; attempt < 64 && !nonzero; ++attempt) {
                Vec combo(slots.size());
                for (const Vec& basis_vec : solution.basis()) {
                    const int weight_coeff = dist(rng);
                    if (weight_coeff == 0) continue;
                    for (std::size_t t = 0; t < slots.size(); ++t)
                        combo[t] += Scalar(Rational(weight_coeff)) * basis_vec[t];
                }
                nonzero = !is_zero(combo);
                if (nonzero) coeffs = std::move(combo);
            }
            if (!nonzero) coeffs = solution.basis().front();
            const Matrix x = realize(coeffs);
            if (!x.is_real())
                throw InternalError("generator: extension component is not real");
            if (bracket(h, x) != Scalar(k - 2) * x)
                throw InternalError("generator: extension has wrong h-weight");
            total_n += x;
        }
    }

    NilpotentOrbit orbit{total_n, f, w};
    AdmissibilityReport verdict = split_admissibility(orbit);
    if (!verdict.split_verdict_direct())
        throw InternalError("generator: constructed orbit is not admissible and split: " +
                            verdict.witness);
    return orbit;
}

}  // namespace mhx
