#include "vdw/simplex.hpp"

#include "vdw/error.hpp"

#include <algorithm>

namespace vdw::lp {

namespace {

/// Dense tableau: rows of [A | b] with the objective kept separately as a
/// reduced-cost row. Basis tracked per row.
struct Tableau {
    std::size_t ncols = 0;  // structural + slack + artificial columns
    std::vector<RatVec> rows;
    RatVec rhs;
    std::vector<std::size_t> basis;

    void pivot(std::size_t prow, std::size_t pcol) {
        const Rat inv = 1 / rows[prow][pcol];
        for (auto& v : rows[prow]) v *= inv;
        rhs[prow] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == prow || rows[i][pcol] == 0) continue;
            const Rat f = rows[i][pcol];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[prow][j];
            rhs[i] -= f * rhs[prow];
        }
        basis[prow] = pcol;
    }
};

/// Bland's rule: entering column = lowest index with negative reduced cost;
/// leaving row = smallest ratio, ties by lowest basis index. Returns false
/// once optimal; throws on unboundedness.
bool simplex_step(Tableau& t, RatVec& cost, Rat& cost_rhs,
                  const std::vector<bool>& allowed) {
    std::size_t pcol = t.ncols;
    for (std::size_t j = 0; j < t.ncols; ++j) {
        if (allowed[j] && cost[j] < 0) {
            pcol = j;
            break;
        }
    }
    if (pcol == t.ncols) return false;

    std::size_t prow = t.rows.size();
    Rat best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i][pcol] <= 0) continue;
        const Rat ratio = t.rhs[i] / t.rows[i][pcol];
        if (prow == t.rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && t.basis[i] < t.basis[prow])) {
            prow = i;
            best_ratio = ratio;
        }
    }
    if (prow == t.rows.size()) throw Error("simplex: unbounded direction");

    t.pivot(prow, pcol);
    const Rat f = cost[pcol];
    if (f != 0) {
        for (std::size_t j = 0; j < t.ncols; ++j) cost[j] -= f * t.rows[prow][j];
        cost_rhs -= f * t.rhs[prow];
    }
    return true;
}

}  // namespace

Result solve(std::size_t nvars, const std::vector<Constraint>& constraints,
             const RatVec& objective) {
    if (objective.size() != nvars) throw Error("simplex: objective size mismatch");

    std::size_t n_slack = 0;
    for (const auto& c : constraints) {
        if (c.coeffs.size() != nvars) throw Error("simplex: constraint size mismatch");
        if (c.rel != Rel::eq) ++n_slack;
    }
    const std::size_t m = constraints.size();
    const std::size_t ncols = nvars + n_slack + m;  // artificials for every row

    Tableau t;
    t.ncols = ncols;
    t.rows.assign(m, RatVec(ncols, Rat(0)));
    t.rhs.assign(m, Rat(0));
    t.basis.assign(m, 0);

    std::size_t slack_at = nvars;
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint& c = constraints[i];
        const bool flip = c.rhs < 0;
        const Rat s = flip ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < nvars; ++j) t.rows[i][j] = s * c.coeffs[j];
        t.rhs[i] = s * c.rhs;
        Rel rel = c.rel;
        if (flip && rel == Rel::le) rel = Rel::ge;
        else if (flip && rel == Rel::ge) rel = Rel::le;
        if (rel != Rel::eq) {
            t.rows[i][slack_at] = rel == Rel::le ? Rat(1) : Rat(-1);
            ++slack_at;
        }
        // Artificial variable for the initial basis.
        t.rows[i][nvars + n_slack + i] = 1;
        t.basis[i] = nvars + n_slack + i;
    }

    // Slack columns with +1 coefficient can serve as the initial basis for
    // their row; use the artificial only where needed. Simpler and exact: a
    // phase-1 over all artificials handles both cases uniformly.
    std::vector<bool> allow_all(ncols, true);

    RatVec phase1_cost(ncols, Rat(0));
    Rat phase1_rhs(0);
    for (std::size_t i = 0; i < m; ++i) {
        // cost row = sum of artificial rows (reduced against the basis).
        for (std::size_t j = 0; j < ncols; ++j) phase1_cost[j] -= t.rows[i][j];
        phase1_rhs -= t.rhs[i];
    }
    for (std::size_t i = 0; i < m; ++i) phase1_cost[nvars + n_slack + i] = 0;

    while (simplex_step(t, phase1_cost, phase1_rhs, allow_all)) {}
    if (phase1_rhs != 0) {
        Result r;
        r.status = Status::infeasible;
        return r;
    }

    // Drive any artificial still in the basis out, or confirm its row is
    // degenerate.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < nvars + n_slack) continue;
        std::size_t pcol = ncols;
        for (std::size_t j = 0; j < nvars + n_slack; ++j) {
            if (t.rows[i][j] != 0) {
                pcol = j;
                break;
            }
        }
        if (pcol == ncols) continue;  // zero row
        t.pivot(i, pcol);
        const Rat f = phase1_cost[pcol];
        if (f != 0) {
            for (std::size_t j = 0; j < ncols; ++j) phase1_cost[j] -= f * t.rows[i][j];
            phase1_rhs -= f * t.rhs[i];
        }
    }

    // Phase 2: artificials barred from entering.
    std::vector<bool> allowed(ncols, true);
    for (std::size_t j = nvars + n_slack; j < ncols; ++j) allowed[j] = false;

    RatVec cost(ncols, Rat(0));
    Rat cost_rhs(0);
    for (std::size_t j = 0; j < nvars; ++j) cost[j] = objective[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (cost[t.basis[i]] == 0) continue;
        const Rat f = cost[t.basis[i]];
        for (std::size_t j = 0; j < ncols; ++j) cost[j] -= f * t.rows[i][j];
        cost_rhs -= f * t.rhs[i];
    }

    while (simplex_step(t, cost, cost_rhs, allowed)) {}

    Result r;
    r.status = Status::optimal;
    r.x.assign(nvars, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < nvars) r.x[t.basis[i]] = t.rhs[i];
    r.objective = -cost_rhs;
    return r;
}

}  // namespace vdw::lp
