#include "mhx/weight_filtration.hpp"

#include <algorithm>
#include <limits>

#include "mhx/error.hpp"
#include "mhx/nilpotent.hpp"

namespace mhx {

IncreasingFiltration monodromy_weight(const Matrix& n) {
    if (!n.is_square()) throw InputError("monodromy_weight: non-square matrix");
    if (!is_nilpotent(n)) throw InputError("monodromy_weight: matrix is not nilpotent");
    const std::size_t dim = n.rows();
    if (dim == 0) throw InputError("monodromy_weight: empty matrix");

    std::size_t d = 1;  // nilpotency index
    while (!n.pow(d).is_zero()) ++d;

    std::vector<Subspace> kernels, images;  // of n^0 .. n^d
    for (std::size_t e = 0; e <= d; ++e) {
        kernels.push_back(kernel(n.pow(e)));
        images.push_back(image(n.pow(e)));
    }
    auto ker_at = [&](long e) {
        if (e <= 0) return Subspace::zero(dim);
        return kernels[std::min<std::size_t>(static_cast<std::size_t>(e), d)];
    };

    // W_l = sum_{a >= 0} ker(N^{l+a+1}) cap im(N^a).
    const int top = static_cast<int>(d) - 1;
    std::map<int, Subspace> steps;
    for (int l = -top; l <= top; ++l) {
        Subspace acc = Subspace::zero(dim);
        for (std::size_t a = 0; a < d; ++a)
            acc = acc.sum(ker_at(l + static_cast<long>(a) + 1).intersect(images[a]));
        steps.emplace(l, acc);
    }
    IncreasingFiltration w(dim, std::move(steps));

    // Defining properties, re-checked.
    if (!lowers_filtration(n, w, 2))
        throw InternalError("monodromy_weight: constructed filtration is not lowered by 2");
    for (int l = 1; l <= top; ++l) {
        const std::size_t dim_up = w.at(l).dim() - w.at(l - 1).dim();
        const std::size_t dim_dn = w.at(-l).dim() - w.at(-l - 1).dim();
        const Subspace mapped = w.at(l).image_under(n.pow(static_cast<std::size_t>(l)));
        if (dim_up != dim_dn || mapped.sum(w.at(-l - 1)) != w.at(-l))
            throw InternalError("monodromy_weight: power map is not a graded isomorphism");
    }
    return w;
}

IncreasingFiltration induce_increasing_on_graded(const IncreasingFiltration& m,
                                                 const IncreasingFiltration& w,
                                                 const GradedPiece& piece) {
    const Subspace& wk = w.at(piece.weight);
    std::map<int, Subspace> steps;
    for (const auto& entry : m.jumps()) {
        const int j = entry.first;
        steps.emplace(j, m.at(j).intersect(wk).image_under(piece.projection));
    }
    return IncreasingFiltration(piece.dim(), std::move(steps));
}

bool verify_rel(const Matrix& n, const IncreasingFiltration& w, const IncreasingFiltration& m) {
    return verify_rel(n, w, m, nullptr);
}

bool verify_rel(const Matrix& n, const IncreasingFiltration& w, const IncreasingFiltration& m,
                std::string* witness) {
    auto fail = [&](const std::string& why) {
        if (witness) *witness = why;
        return false;
    };
    if (w.ambient() != m.ambient() || n.rows() != w.ambient() || !n.is_square())
        return fail("dimension mismatch");
    if (!is_nilpotent(n)) return fail("N is not nilpotent");
    if (!preserves(n, w)) return fail("N does not preserve W");
    if (!lowers_filtration(n, m, 2))
        return fail("condition (i): N does not lower the candidate filtration by 2");
    for (int k = w.lowest(); k <= w.highest(); ++k) {
        if (w.at(k).dim() == w.at(k - 1).dim()) continue;
        const GradedPiece piece = graded_piece(w, k);
        const Matrix nk = induce_operator(n, w, piece);
        const IncreasingFiltration expected = monodromy_weight(nk).shift(-k);
        const IncreasingFiltration induced = induce_increasing_on_graded(m, w, piece);
        if (induced != expected)
            return fail("condition (ii): wrong induced filtration on Gr_" + std::to_string(k));
    }
    return true;
}

namespace {

/// Lifts a coordinate filtration through column vectors `cols` (as the
/// subspace basis): step value -> span of basis combinations.
Subspace lift_coords(const Subspace& coords, const Matrix& cols) {
    std::vector<Vec> rows;
    for (const Vec& c : coords.basis()) rows.push_back(cols.apply(c));
    return Subspace::span(rows, cols.rows());
}

}  // namespace

RelWeightResult relative_weight(const Matrix& n, const IncreasingFiltration& w) {
    if (!n.is_square() || n.rows() != w.ambient())
        throw InputError("relative_weight: dimension mismatch");
    if (!is_nilpotent(n)) throw InputError("relative_weight: N is not nilpotent");
    if (!preserves(n, w)) throw InputError("relative_weight: N does not preserve W");
    const std::size_t dim = w.ambient();

    RelWeightResult result;

    // M is grown one W-jump at a time. Invariant between stages: `cur` is
    // W_b for the last processed jump b, and `msteps` restricted to `cur` is
    // the relative weight filtration of (N|cur, W|cur).
    std::map<int, Subspace> msteps;
    Subspace cur = Subspace::zero(dim);
    bool first = true;

    for (const auto& wentry : w.jumps()) {
        const int b = wentry.first;
        const Subspace& wb = wentry.second;

        if (first) {
            // Single graded piece: M = W(N|_{W_b}) shifted to be centered at b.
            const GradedPiece piece = graded_piece(w, b);
            const Matrix nk = induce_operator(n, w, piece);
            const IncreasingFiltration base = monodromy_weight(nk).shift(-b);
            for (const auto& [j, coords] : base.jumps())
                msteps[j] = lift_coords(coords, piece.section);
            cur = wb;
            first = false;
            continue;
        }

        // Extension data across cur = W_{b'} < W_b: quotient coordinates C,
        // induced map on them, and its shifted monodromy filtration G.
        const Subspace comp = echelon_complement(cur, wb);
        const std::size_t m = comp.dim();
        const std::size_t dprime = cur.dim();
        // Columns [C | cur] are a basis of W_b.
        Matrix cols(dim, m + dprime);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < dim; ++i) cols.at(i, j) = comp.basis()[j][i];
        for (std::size_t j = 0; j < dprime; ++j)
            for (std::size_t i = 0; i < dim; ++i) cols.at(i, m + j) = cur.basis()[j][i];

        Matrix nbar(m, m);                      // induced map on W_b / cur
        std::vector<Vec> lower_parts(m);        // cur-components of N c_t
        for (std::size_t t = 0; t < m; ++t) {
            const Vec img = n.apply(comp.basis()[t]);
            auto sol = solve(cols, img);
            if (!sol) throw InternalError("relative_weight: N does not preserve W_b");
            Vec cpart(m);
            for (std::size_t i = 0; i < m; ++i) {
                nbar.at(i, t) = (*sol)[i];
                cpart[i] = (*sol)[i];
            }
            Vec lifted_c(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                Scalar acc;
                for (std::size_t tt = 0; tt < m; ++tt) acc += comp.basis()[tt][i] * cpart[tt];
                lifted_c[i] = acc;
            }
            lower_parts[t] = img - lifted_c;
        }
        const IncreasingFiltration g = monodromy_weight(nbar).shift(-b);

        // Adapted coordinate basis of the quotient, grouped by the level at
        // which each vector enters G.
        struct AdaptedVec {
            int level;
            Vec coords;   // in C-coordinates (length m)
            Vec ambient;  // lifted to V through comp
        };
        std::vector<AdaptedVec> adapted;
        for (const auto& gentry : g.jumps()) {
            const int j = gentry.first;
            const Subspace fresh = echelon_complement(g.at(j - 1), g.at(j));
            for (const Vec& coords : fresh.basis()) {
                AdaptedVec av;
                av.level = j;
                av.coords = coords;
                av.ambient = Vec(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    Scalar acc;
                    for (std::size_t t = 0; t < m; ++t) acc += comp.basis()[t][i] * coords[t];
                    av.ambient[i] = acc;
                }
                adapted.push_back(std::move(av));
            }
        }

        auto m_at = [&](int j) -> Subspace {
            if (msteps.empty() || j < msteps.begin()->first) return Subspace::zero(dim);
            auto it = msteps.upper_bound(j);
            if (it == msteps.begin()) return Subspace::zero(dim);
            return std::prev(it)->second;
        };

        // Unknown correction h: quotient coords -> cur, written as
        // h = B' X with B' the basis of cur; X is dprime x m. For each
        // adapted vector c at level j the constraint is
        //   N h(c) - h(Nbar c) + (N c)_cur  in  M_{j-2},
        // which is affine-linear in X.
        const Matrix bprime = cur.basis_matrix().transpose();  // dim x dprime
        const Matrix nb = n * bprime;                          // dim x dprime
        const std::size_t unknowns = dprime * m;

        std::vector<Vec> sys_rows;
        std::vector<Scalar> sys_rhs;
        std::vector<int> row_level;
        for (const AdaptedVec& av : adapted) {
            const Matrix ann = m_at(av.level - 2).annihilator();
            const Vec nbar_c = nbar.apply(av.coords);
            Vec w_part = n.apply(av.ambient);
            for (std::size_t t = 0; t < m; ++t) {
                const Vec& ct = comp.basis()[t];
                for (std::size_t i = 0; i < dim; ++i) w_part[i] -= nbar_c[t] * ct[i];
            }
            for (std::size_t rr = 0; rr < ann.rows(); ++rr) {
                Vec row(unknowns);
                for (std::size_t al = 0; al < dprime; ++al) {
                    Scalar a_nb;  // (ann_r . N B')_alpha
                    Scalar a_b;   // (ann_r . B')_alpha
                    for (std::size_t i = 0; i < dim; ++i) {
                        a_nb += ann.at(rr, i) * nb.at(i, al);
                        a_b += ann.at(rr, i) * bprime.at(i, al);
                    }
                    for (std::size_t be = 0; be < m; ++be)
                        row[al * m + be] = a_nb * av.coords[be] - a_b * nbar_c[be];
                }
                Scalar rhs;
                for (std::size_t i = 0; i < dim; ++i) rhs -= ann.at(rr, i) * w_part[i];
                sys_rows.push_back(std::move(row));
                sys_rhs.push_back(rhs);
                row_level.push_back(av.level);
            }
        }

        auto solve_prefix = [&](int max_level) -> std::optional<Vec> {
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < sys_rows.size(); ++r) {
                if (row_level[r] > max_level) continue;
                Vec row = sys_rows[r];
                row.push_back(sys_rhs[r]);
                rows.push_back(std::move(row));
            }
            const auto pivots = rref(rows);
            if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
            Vec x(unknowns);
            for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][unknowns];
            return x;
        };

        const auto solution = solve_prefix(std::numeric_limits<int>::max());
        if (!solution) {
            int bad_level = 0;
            for (const AdaptedVec& av : adapted)
                if (!solve_prefix(av.level)) {
                    bad_level = av.level;
                    break;
                }
            result.exists = false;
            result.failure_witness =
                "no extension across W_" + std::to_string(b) +
                ": conditions (i)+(ii) are unsatisfiable at relative weight " +
                std::to_string(bad_level) + " (the candidate level-" + std::to_string(bad_level) +
                " subspace cannot be mapped into level " + std::to_string(bad_level - 2) + ")";
            return result;
        }

        Matrix x(dprime, m);
        for (std::size_t al = 0; al < dprime; ++al)
            for (std::size_t be = 0; be < m; ++be) x.at(al, be) = (*solution)[al * m + be];
        const Matrix h = bprime * x;  // dim x m

        // New filtration steps: M_j = M'_j + span{ c + h(c) } over adapted
        // vectors of level <= j.
        std::map<int, Subspace> next;
        std::vector<int> levels;
        for (const auto& e : msteps) levels.push_back(e.first);
        for (const AdaptedVec& av : adapted) levels.push_back(av.level);
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        for (int j : levels) {
            Subspace acc = m_at(j);
            std::vector<Vec> gens = acc.basis();
            for (const AdaptedVec& av : adapted) {
                if (av.level > j) continue;
                Vec v = av.ambient;
                const Vec corr = h.apply(av.coords);
                for (std::size_t i = 0; i < dim; ++i) v[i] += corr[i];
                gens.push_back(std::move(v));
            }
            next[j] = Subspace::span(gens, dim);
        }
        msteps = std::move(next);
        cur = wb;
    }

    IncreasingFiltration relw(dim, msteps);
    std::string witness;
    if (!verify_rel(n, w, relw, &witness))
        throw InternalError("relative_weight: constructed filtration fails verification: " +
                            witness);
    result.exists = true;
    result.filtration = std::move(relw);
    return result;
}

}  // namespace mhx
