#pragma once

#include "vdw/curve.hpp"
#include "vdw/divisor.hpp"
#include "vdw/nevanlinna.hpp"
#include "vdw/nochka.hpp"
#include "vdw/position.hpp"
#include "vdw/variety.hpp"
#include "vdw/wronskian.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vdw {

/// Exact nondegeneracy test of a curve against the degree-d quotient classes:
/// the pullbacks of a standard-monomial basis must be linearly independent.
/// On failure, `killing_class` is a nonzero degree-d form with identically
/// vanishing pullback.
struct Nondegeneracy {
    bool ok = false;
    std::optional<Poly> killing_class;
    std::vector<Poly> basis_pullbacks;
};

Nondegeneracy nondegeneracy_over(const Variety& v, int d, const RationalCurve& f);

/// Whether a genuine hypothesis of a theorem-level check failed (reported as
/// a verdict, never an exception, so contrapositive scenarios stay
/// expressible).
struct HypothesisFailure {
    std::string name;
    std::string detail;
};

struct SmtOptions {
    double margin_r0 = 10.0;
    bool require_trend = false;
    std::uint64_t subspace_seed = 1;
    std::uint64_t completion_seed = 2;
    QuadratureOptions quadrature;
};

struct SmtRow {
    double r = 0.0;
    double t_f = 0.0;
    std::vector<double> n_trunc;  // per hypersurface, common-degree lift
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct ClaimZeroVerdict {
    Poly factor{1};
    std::vector<int> vanishing;        // indices with positive multiplicity
    std::vector<int> multiplicities;   // matching `vanishing`
    int nu_w = 0;
    Rat weighted_excess;               // sum omega_i * max(mult - (H-1), 0)
    bool ok = false;
};

struct ClaimIntegratedRow {
    double r = 0.0;
    double lhs = 0.0;  // sum omega_i N_i(r) - N_W(r)
    double rhs = 0.0;  // sum omega_i N^{[H-1]}_i(r)
    bool ok = false;
};

struct ClaimReport {
    std::vector<ClaimZeroVerdict> zero_verdicts;
    std::vector<ClaimIntegratedRow> integrated;
    bool pointwise_ok = false;
    bool integrated_ok = false;
    Poly wronskian{1};
};

struct SmtReport {
    std::string scenario_id;
    int q = 0, N = 0, k = 0, d = 0, hilbert = 0;
    Rat lhs_coeff;
    bool at_threshold = false;
    std::optional<HypothesisFailure> hypothesis;

    std::vector<SmtRow> rows;
    double min_margin = 0.0;
    bool margin_ok = false;

    std::vector<double> trend_radii;
    std::vector<double> trend_ratios;  // margin / T_f at doubling radii
    bool trend_ok = false;

    std::optional<WeightSystem> weights;
    std::optional<AdmissibleSet> admissible;
    std::optional<ClaimReport> claim;

    /// Slack of the weighted intermediate inequality at the trend radii,
    /// divided by T_f; expected to decrease.
    std::vector<double> weighted_slack_over_t;

    /// Wronskian proportionality audit: for every full-rank (k+1)-subset,
    /// replacing the basis pullbacks by the subset plus the shared completion
    /// forms rescales the Wronskian by the exact change-of-basis determinant.
    /// Vacuously true when the weight machinery does not apply.
    int proportionality_checked = 0;
    bool proportionality_ok = true;

    bool ok() const { return !hypothesis && margin_ok && trend_ok && proportionality_ok; }
};

/// Second-main-theorem margin check for one scenario: verifies subgeneral
/// position, nondegeneracy and the hypersurface-count gate, then tabulates
///   LHS(r) = (q - (2N-k+1) H_V(d) / (k+1)) T_f(r)
///   RHS(r) = (1/d) sum_i N^{[H_V(d)-1]} of (Q_i(f))^{d/d_i}
/// over the grid, with the pointwise multiplicity claim and the weighted
/// diagnostics attached when the weight machinery applies.
SmtReport smt_check(const Variety& v, const Family& f, const RationalCurve& curve,
                    const RGrid& grid, const SmtOptions& opts = {});

/// Pointwise and integrated multiplicity claim: at every exact zero of any
/// pullback, the Wronskian multiplicity dominates the weighted truncation
/// excess, and the integrated counting-function inequality holds on the grid.
/// Fully closed-form: exact valuations pointwise, closed-form counting on the
/// grid.
ClaimReport claim_check(const Variety& v, const Family& f, const RationalCurve& curve,
                        const WeightSystem& ws, const AdmissibleSet& a, const RGrid& grid);

struct ComparabilityReport {
    std::optional<HypothesisFailure> hypothesis;
    std::vector<double> radii;
    std::vector<double> ratio;     // T_f / T_g
    double ratio_at_rmax = 0.0;
    double ratio_sup = 0.0;
    double ratio_inf = 0.0;
    double expected = 0.0;         // deg f / deg g
    bool within_tolerance = false;  // 5% at the largest radius

    bool ok() const { return !hypothesis && within_tolerance; }
};

/// Characteristic-function comparability of two curves through the shared
/// family, with the rational-curve degree ratio as the expected limit.
ComparabilityReport comparability_check(const RationalCurve& f, const RationalCurve& g,
                                        const Family& fam, const Variety& v, const RGrid& grid,
                                        const QuadratureOptions& quad = {});

int sigma_shift(int i, int n_subgeneral, int q);  // 1-based wraparound partner

struct PAudit {
    int index = 0;      // 1-based
    int partner = 0;    // sigma(index)
    Poly p{1};
    bool identically_zero = false;
    bool divisor_bound_ok = false;   // exact, at every zero
    std::vector<double> n_p;          // N_{P_i}(r) over the audit radii
    std::vector<double> upper;        // d (T_f + T_g)(r) + base constant
    bool sandwich_ok = false;
};

/// P_i = F_i G_{sigma(i)} - G_i F_{sigma(i)} on the common-degree lifts,
/// with the exact divisor lower bound and the integrated sandwich audit.
PAudit build_P(int index_1based, const RationalCurve& f, const RationalCurve& g,
               const Family& fam, const RGrid& grid, const QuadratureOptions& quad = {});

enum class UnicityMode { a, b };

struct UnicityReport {
    std::optional<HypothesisFailure> hypothesis;

    bool hyp_i_ok = false;
    std::vector<std::pair<int, int>> hyp_i_violations;
    bool hyp_ii_ok = false;
    struct FactorViolation {
        int index;      // hypersurface, 0-based
        bool on_g;      // factor taken from Q_i(g) rather than Q_i(f)
        Poly factor;
        int s, t;       // minor that the factor fails to divide
    };
    std::vector<FactorViolation> hyp_ii_violations;

    UnicityMode mode = UnicityMode::a;
    bool gate_ok = false;
    Rat gate_threshold;

    bool minors_vanish = false;        // f = g projectively
    std::vector<std::vector<int>> ratio_groups;
    std::optional<std::vector<int>> large_group;  // size >= N+1 when found

    struct AuditRow {
        double r;
        double n_h;        // counting of the first nonzero minor
        double sum_n1_f;
        double sum_n1_g;
        double t_f, t_g;
        bool i52_ok;       // N_H >= sum N^{[1]}(f) within tolerance
        bool i53_ok;       // 2(T_f+T_g) >= sum N1_f + sum N1_g + base constant
    };
    std::vector<AuditRow> audit;       // populated when f != g
    std::vector<PAudit> p_audits;      // mode b fallback

    bool conclusion_ok = false;
    std::string summary;

    bool ok() const { return !hypothesis && conclusion_ok; }
};

/// Uniqueness machinery: exact shared-zero hypotheses, the rational gate for
/// the chosen mode, and either the projective-equality conclusion (mode a) or
/// ratio-group detection with the P_i audit (mode b).
UnicityReport unicity_check(const RationalCurve& f, const RationalCurve& g, const Family& fam,
                            const Variety& v, UnicityMode mode, const RGrid& grid,
                            const QuadratureOptions& quad = {});

struct CorollaryReport {
    std::optional<HypothesisFailure> hypothesis;
    int span_dim_f = -1;
    int span_dim_g = -1;
    bool spans_equal = false;
    std::optional<Poly> separating_hyperplane;  // contains one image, not the other
    bool gate_ok = false;
    Rat gate_threshold;
    std::optional<UnicityReport> unicity;
    bool f_equals_g = false;

    bool ok() const { return !hypothesis && spans_equal && gate_ok && f_equals_g; }
};

/// Hyperplane uniqueness demonstration: computes the span dimensions, checks
/// V(f) = V(g) by exact linear algebra, evaluates the q > 2(2n-k+1) gate and
/// replays the ratio-group argument on the span variety.
CorollaryReport corollary_demo(const RationalCurve& f, const RationalCurve& g,
                               const std::vector<Hypersurface>& hyperplanes, const RGrid& grid,
                               const QuadratureOptions& quad = {});

/// Dimension of the smallest projective linear subspace containing the curve
/// image (rank of the component span minus one).
int span_dimension(const RationalCurve& f);

}  // namespace vdw
