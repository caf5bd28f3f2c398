#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhx/deligne.hpp"
#include "mhx/float_backend.hpp"
#include "mhx/hodge.hpp"
#include "mhx/sl2.hpp"

namespace mhx {

/// Orbit data (N, F, W): N a real nilpotent endomorphism preserving W and
/// horizontal for F, with (exp(iyN).F, W) a mixed Hodge structure for large
/// sampled y. The invariants are established by check_orbit, not the
/// constructor.
struct NilpotentOrbit {
    Matrix n;
    DecreasingFiltration f;
    IncreasingFiltration w;
};

/// A polynomial model F(z) = exp(zN) exp(Gamma(s)).F with s the coordinate
/// at the puncture, Gamma(s) = sum_j gamma[j] s^j, each coefficient strictly
/// lowering W. Limits refer to the coordinate s itself, i.e. to (ds)_0.
struct PeriodMapModel {
    NilpotentOrbit orbit;
    std::map<int, Matrix> gamma;  // j >= 1 -> coefficient in Lie_{-1}

    Matrix gamma_at(const Rational& s) const;
};

struct OrbitCheckReport {
    bool n_real = false;
    bool n_nilpotent = false;
    bool n_preserves_w = false;
    bool horizontal = false;
    struct Sample {
        Rational y;
        bool is_mhs = false;
        std::string witness;
        std::map<std::pair<int, int>, std::size_t> hodge_numbers;
    };
    std::vector<Sample> samples;
    bool graded_dims_constant = false;
    bool pass() const;
};

/// Exact horizontality plus mixed-Hodge membership of (exp(iyN).F, W) at
/// every sampled y. Failures are carried in the report, not thrown.
OrbitCheckReport check_orbit(const NilpotentOrbit& orbit, const std::vector<Rational>& ys);

/// Structure of the monodromy components N_{-k} relative to a grading and
/// the representation assembled from the graded data: N_0 is the lowering
/// element, the degree-1 component vanishes, and each deeper component is a
/// highest weight vector of weight k-2.
struct Sl2StructureReport {
    std::map<int, Matrix> components;  // k -> N_{-k}
    bool n0_equals_rho_nminus = false;
    bool n_minus1_zero = false;
    std::map<int, bool> highest_weight_ok;  // k >= 2 present in components
    bool all_checks() const;
};

Sl2StructureReport sl2_structure_report(const NilpotentOrbit& orbit, const Grading& yinf);

struct AdmissibilityReport {
    OrbitCheckReport orbit_check;
    // direct route
    bool relative_weight_exists = false;
    bool limiting_filtration_exists = false;
    bool is_mhs_pair = false;
    bool n_is_minus1minus1 = false;
    bool w_by_sub_mhs = false;
    bool is_split = false;
    bool graded_orbits_split = false;
    std::optional<IncreasingFiltration> rel_w;
    std::optional<Grading> y_infty;
    bool y_infty_real = false;
    // limit route: the transported gradings exp(-iyN).Y_{(exp(iyN).F,W)}
    bool limit_constant = false;
    bool limit_real = false;
    bool limit_grades_w = false;
    std::optional<Matrix> obstruction;  // unipotent route: the (0,-1) component
    std::optional<Sl2StructureReport> sl2_structure;
    std::string witness;

    /// Admissibility is the two §-level clauses: the limiting filtration
    /// exists (automatic for orbit data once check_orbit passes) and the
    /// relative weight filtration exists.
    bool admissible() const { return limiting_filtration_exists && relative_weight_exists; }
    bool split_verdict_direct() const {
        return admissible() && is_mhs_pair && n_is_minus1minus1 && w_by_sub_mhs && is_split;
    }
    bool split_verdict_limit() const {
        return orbit_check.pass() && limit_constant && limit_real && limit_grades_w &&
               graded_orbits_split;
    }
};

/// Admissible+split verdict computed along two independent routes: the
/// direct one (relative weight filtration, limit mixed Hodge structure,
/// morphism type, splitness) and the limit one (constancy, reality and
/// grading property of the transported gradings at sampled y, plus split
/// graded orbits). The two verdicts must agree; disagreement throws
/// InternalError.
AdmissibilityReport split_admissibility(const NilpotentOrbit& orbit,
                                        const std::vector<Rational>& ys = {Rational(1),
                                                                           Rational(2),
                                                                           Rational(3),
                                                                           Rational(5)});

/// Admissibility for unipotent models (N and all Gamma coefficients act
/// trivially on Gr^W): admissible iff N lowers W by 2; reports the limiting
/// grading Y_{(F,W)} when admissible and the obstructing (0,-1)-component
/// of N otherwise.
AdmissibilityReport unipotent_admissibility(const PeriodMapModel& model);

// ---------------------------------------------------------------------------
// Split-orbit generator

struct GeneratorIrrep {
    int d = 0;      // highest weight (chain of length d+1)
    int count = 1;  // multiplicity
    int twist = 0;  // Hodge-type twist; nonzero or odd k+d forces a conjugate pair
};

struct GeneratorSpec {
    std::map<int, std::vector<GeneratorIrrep>> content;  // W-weight -> graded content
    std::map<int, int> extensions;                       // k >= 2 -> number of N_{-k} generators
    unsigned long seed = 0;
};

/// Builds a verified admissible split orbit: a real grading with the
/// prescribed graded content, the standard Hodge frames on each graded
/// piece, and random highest-weight extension components of each requested
/// degree. Throws InputError when the requested extension degree admits no
/// highest-weight vector for the given content.
NilpotentOrbit generate_split_orbit(const GeneratorSpec& spec);

/// The grading used by the generator (weight-block diagonal).
Grading generator_grading(const GeneratorSpec& spec);

// ---------------------------------------------------------------------------
// Limit-grading traces

enum class TraceMode { ExactDecoupled, Float };

struct TraceSample {
    Rational y;
    std::optional<Grading> grading;  // exact mode
    fp::FMat approx;                 // float mode trace operator
    double distance = 0.0;           // max-norm gap to the predicted operator
    double norm = 0.0;               // max-norm of the trace operator
    bool valid = true;
    bool flagged = false;  // float rank ambiguity; excluded from the trend
    std::string witness;
};

struct TraceReport {
    std::vector<TraceSample> samples;
    Grading prediction;
    TraceMode mode = TraceMode::ExactDecoupled;
    bool bounded = true;     // no norm doubling across consecutive usable samples
    bool converged = false;  // final usable distance < 1e-6
};

/// Samples the transported grading exp(-iyN).Y_{(F(iy),W)} against the
/// predicted limit. Exact mode evaluates the algebraic formulas at rational
/// y with s supplied independently (default 0); float mode couples
/// s = exp(-2 pi y) in binary floating point at the declared rank tolerance.
TraceReport grading_trace(const PeriodMapModel& model, const std::vector<Rational>& ys,
                          TraceMode mode, const std::optional<Rational>& s_exact = std::nullopt);

}  // namespace mhx
