#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhx/error.hpp"
#include "mhx/filtration.hpp"

namespace mhx {

class MixedHodgeStructure;

/// The bigrading induced on End(V) by a mixed Hodge structure:
/// gl(V)^{r,s} = { a : a(I^{p,q}) <= I^{p+r,q+s} }, together with the four
/// distinguished sums and their projections. Types with r >= 0 and s >= 0
/// are counted into the eta_0 summand so that the four projections sum to
/// the identity on all of End(V); for filtration-preserving inputs only the
/// (0,0) type occurs there.
class GlBigrading {
public:
    enum class Part { EtaPlus, EtaZero, EtaMinus, Lambda };

    explicit GlBigrading(const MixedHodgeStructure& mhs);

    std::size_t dim() const { return n_; }

    static Part classify(int r, int s);

    /// (r,s)-component of an arbitrary endomorphism.
    Matrix component(const Matrix& a, int r, int s) const;
    std::map<std::pair<int, int>, Matrix> decompose(const Matrix& a) const;
    Matrix project(const Matrix& a, Part part) const;
    bool in_part(const Matrix& a, Part part) const;

    /// gl(V)^{r,s} as a subspace of C^{n^2} (row-major vectorization).
    Subspace component_space(int r, int s) const;
    Subspace part_space(Part part) const;

    /// Bigrading types that actually occur, i.e. pairs (r,s) of differences
    /// of types of nonzero pieces.
    std::vector<std::pair<int, int>> occurring_types() const;

private:
    std::size_t n_;
    Matrix basis_;
    Matrix basis_inv_;
    std::vector<std::pair<int, int>> col_type_;
};

/// A pair (F, W) together with its Deligne bigrading {I^{p,q}} and the
/// grading Y acting by p+q on I^{p,q}. Construction computes the bigrading
/// by the standard intersection formula and then verifies the defining
/// axioms, so a successfully built value is a certified mixed Hodge
/// structure. Immutable.
class MixedHodgeStructure {
public:
    /// Throws NotMixedHodgeError when (F, W) is not a mixed Hodge structure.
    static MixedHodgeStructure build(const DecreasingFiltration& f,
                                     const IncreasingFiltration& w);
    /// Non-throwing variant; on failure returns nullopt and stores the first
    /// violated axiom into *witness when given.
    static std::optional<MixedHodgeStructure> try_build(const DecreasingFiltration& f,
                                                        const IncreasingFiltration& w,
                                                        std::string* witness = nullptr);

    std::size_t dim() const { return f_.ambient(); }
    const DecreasingFiltration& hodge_filtration() const { return f_; }
    const IncreasingFiltration& weight_filtration() const { return w_; }
    const std::map<std::pair<int, int>, Subspace>& pieces() const { return pieces_; }
    const Subspace& piece(int p, int q) const;
    const Grading& grading() const { return y_; }
    const GlBigrading& gl() const { return *gl_; }

    /// Graded Hodge numbers h^{p,q} = dim I^{p,q} of the nonzero pieces.
    std::map<std::pair<int, int>, std::size_t> hodge_numbers() const;

    bool is_split_real() const;

    friend bool operator==(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
        return a.pieces_ == b.pieces_;
    }

private:
    MixedHodgeStructure() = default;

    DecreasingFiltration f_;
    IncreasingFiltration w_;
    std::map<std::pair<int, int>, Subspace> pieces_;
    Grading y_;
    std::shared_ptr<const GlBigrading> gl_;
    Subspace zero_;
};

/// Builds the certified bigrading of (F, W).
inline MixedHodgeStructure deligne_bigrading(const DecreasingFiltration& f,
                                             const IncreasingFiltration& w) {
    return MixedHodgeStructure::build(f, w);
}

bool is_split_real(const MixedHodgeStructure& mhs);

Matrix project(const Matrix& a, const MixedHodgeStructure& mhs, GlBigrading::Part part);

/// a(I^{p,q}) <= I^{p+r,q+s} for every piece.
bool morphism_type(const Matrix& a, const MixedHodgeStructure& mhs, int r, int s);

}  // namespace mhx
