#include "vdw/runner.hpp"

#include "vdw/error.hpp"
#include "vdw/harness.hpp"
#include "vdw/nochka.hpp"
#include "vdw/parser.hpp"
#include "vdw/rng.hpp"
#include "vdw/wronskian.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace vdw {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::hypothesis_violated: return "hypothesis-violated";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

int RunReport::exit_code() const {
    bool any_fail = false, any_inconclusive = false, any_hypothesis = false;
    for (const auto& r : results) {
        any_fail |= r.status == CheckStatus::fail;
        any_inconclusive |= r.status == CheckStatus::inconclusive;
        any_hypothesis |= r.status == CheckStatus::hypothesis_violated;
    }
    if (any_fail) return 1;
    if (any_inconclusive) return 3;
    if (any_hypothesis) return 2;
    return 0;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{
        "hilbert",  "position", "nochka",       "wronskian", "smt",      "claim",
        "jensen",   "comparability", "unicity", "corollary", "logderiv"};
    return names;
}

namespace {

/// Writes content to `<out_dir>/<name>` through a temporary file and rename.
std::string write_artifact(const std::filesystem::path& out_dir, const std::string& name,
                           const std::string& content) {
    std::filesystem::create_directories(out_dir);
    const auto final_path = out_dir / name;
    const auto tmp_path = out_dir / (name + ".tmp");
    {
        std::ofstream os(tmp_path, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot write artifact " + tmp_path.string());
        os << content;
    }
    std::filesystem::rename(tmp_path, final_path);
    return final_path.string();
}

QuadratureOptions quad_options(const Scenario& sc) {
    QuadratureOptions q;
    q.rel_tol = sc.tolerances.quadrature_rel_tol;
    return q;
}

struct CheckContext {
    const Scenario& sc;
    const std::filesystem::path& out_dir;
};

CheckResult check_hilbert(const CheckContext& ctx) {
    CheckResult res{"hilbert", CheckStatus::pass, "", {}};
    const Variety& v = *ctx.sc.variety;
    v.validate_dimension();

    std::ostringstream csv;
    csv << "d,H_V,dim_H_d\n";
    const std::size_t n = v.ambient_n();
    bool monotone = true;
    int prev = 0;
    for (int d = 1; d <= v.dim_k() + 3; ++d) {
        const int h = v.hilbert_function(d);
        // dim H_d = C(n + d, n).
        long binom = 1;
        for (std::size_t i = 1; i <= n; ++i)
            binom = binom * (d + static_cast<long>(i)) / static_cast<long>(i);
        if (h > binom) {
            res.status = CheckStatus::fail;
            res.message = "H_V(d) exceeds dim H_d at d = " + std::to_string(d);
        }
        if (d > 1 && h < prev) monotone = false;
        prev = h;
        csv << d << "," << h << "," << binom << "\n";
    }
    if (!monotone) {
        res.status = CheckStatus::fail;
        res.message = "Hilbert function not monotone on the sampled range";
    }
    if (res.message.empty())
        res.message = "H_V(1.." + std::to_string(v.dim_k() + 3) + ") consistent with dim " +
                      std::to_string(v.dim_k());
    res.artifacts.push_back(
        write_artifact(ctx.out_dir, ctx.sc.id + "_hilbert.csv", csv.str()));
    return res;
}

CheckResult check_position(const CheckContext& ctx) {
    CheckResult res{"position", CheckStatus::pass, "", {}};
    const PositionCertificate cert = check_subgeneral(*ctx.sc.family, *ctx.sc.variety);
    std::ostringstream csv;
    csv << "subset,verdict\n";
    for (const auto& sv : cert.verdicts) {
        csv << "\"";
        for (std::size_t i = 0; i < sv.subset.size(); ++i) csv << (i ? " " : "") << sv.subset[i];
        csv << "\"," << (sv.verdict == Emptiness::empty ? "empty" : "nonempty") << "\n";
    }
    res.artifacts.push_back(
        write_artifact(ctx.out_dir, ctx.sc.id + "_position.csv", csv.str()));
    if (cert.is_subgeneral) {
        res.message = "family is in " + std::to_string(ctx.sc.N) + "-subgeneral position (" +
                      std::to_string(cert.verdicts.size()) + " subsets certified)";
    } else {
        res.status = CheckStatus::hypothesis_violated;
        std::ostringstream os;
        os << "subset {";
        for (std::size_t i = 0; i < cert.failing_subset->size(); ++i)
            os << (i ? "," : "") << (*cert.failing_subset)[i];
        os << "} meets the variety";
        res.message = os.str();
    }
    return res;
}

CheckResult check_nochka(const CheckContext& ctx) {
    CheckResult res{"nochka", CheckStatus::pass, "", {}};
    const Variety& v = *ctx.sc.variety;
    const Family& fam = *ctx.sc.family;
    const int k = v.dim_k();

    const auto subspace = generic_subspace(fam, v, k + 1, ctx.sc.seeds.subspace);
    const auto restricted = restrict_to_subspace(fam.lifted_vectors(), subspace);
    const WeightSystem ws = compute_weights(restricted, fam.N(), k);
    const WeightReport report = verify_weights(ws);

    std::ostringstream csv;
    csv << "i,omega\n";
    for (int i = 0; i < ws.q(); ++i)
        csv << (i + 1) << "," << to_string(ws.omegas()[static_cast<std::size_t>(i)]) << "\n";
    res.artifacts.push_back(write_artifact(ctx.out_dir, ctx.sc.id + "_weights.csv", csv.str()));

    if (!report.ok()) {
        res.status = CheckStatus::fail;
        res.message = "weight verification failed";
        return res;
    }

    // Seeded audit of the product-selection property.
    Rng rng(ctx.sc.seeds.audit);
    const int draws = 100;
    std::vector<int> all(static_cast<std::size_t>(ws.q()));
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> r_subsets;
    {
        std::vector<int> idx(static_cast<std::size_t>(fam.N() + 1));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            r_subsets.push_back(idx);
            int j = fam.N();
            while (j >= 0 &&
                   idx[static_cast<std::size_t>(j)] == ws.q() - (fam.N() + 1) + j)
                --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int t = j + 1; t <= fam.N(); ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    for (int draw = 0; draw < draws; ++draw) {
        std::vector<double> e_values(static_cast<std::size_t>(ws.q()));
        for (auto& e : e_values) e = std::exp(10.0 * rng.unit());
        for (const auto& r : r_subsets) select_R0(r, e_values, ws);
    }
    res.message = "weights verified exhaustively; omega_tilde = " + to_string(ws.omega_tilde()) +
                  "; selection audit passed " + std::to_string(draws) + " draws";
    return res;
}

CheckResult check_wronskian(const CheckContext& ctx) {
    CheckResult res{"wronskian", CheckStatus::pass, "", {}};
    const Variety& v = *ctx.sc.variety;
    const Family& fam = *ctx.sc.family;
    const int d = fam.common_degree();
    const int hilbert = v.hilbert_function(d);

    const Nondegeneracy nd = nondegeneracy_over(v, d, ctx.sc.curve_f());
    if (!nd.ok) {
        res.status = CheckStatus::hypothesis_violated;
        res.message = "curve degenerate; killing class " + nd.killing_class->str();
        return res;
    }
    const AdmissibleSet a = find_admissible(nd.basis_pullbacks, hilbert - 1);
    const Poly w = wronskian_det(nd.basis_pullbacks, a);
    if (w.is_zero()) {
        res.status = CheckStatus::fail;
        res.message = "admissible set produced a vanishing Wronskian";
        return res;
    }
    static const std::vector<std::string> z{"z"};
    const Poly h = parse_poly("z", z);
    if (!scaling_check(nd.basis_pullbacks, h, a)) {
        res.status = CheckStatus::fail;
        res.message = "scaling identity failed";
        return res;
    }
    std::ostringstream os;
    os << "admissible orders";
    for (const auto& alpha : a.alphas) os << " " << alpha.degree();
    os << "; W = " << w.str();
    res.message = os.str();
    return res;
}

std::string smt_csv(const SmtReport& rep) {
    std::ostringstream csv;
    csv << "r,T_f";
    for (int i = 1; i <= rep.q; ++i) csv << ",N_trunc_Q" << i;
    csv << ",LHS,RHS,margin\n";
    for (const auto& row : rep.rows) {
        csv << format_csv_value(row.r) << "," << format_csv_value(row.t_f);
        for (double n : row.n_trunc) csv << "," << format_csv_value(n);
        csv << "," << format_csv_value(row.lhs) << "," << format_csv_value(row.rhs) << ","
            << format_csv_value(row.margin) << "\n";
    }
    return csv.str();
}

CheckResult check_smt(const CheckContext& ctx) {
    CheckResult res{"smt", CheckStatus::pass, "", {}};
    SmtOptions opts;
    opts.margin_r0 = ctx.sc.tolerances.margin_r0;
    opts.require_trend = ctx.sc.tolerances.require_margin_trend;
    opts.subspace_seed = ctx.sc.seeds.subspace;
    opts.completion_seed = ctx.sc.seeds.completion;
    opts.quadrature = quad_options(ctx.sc);

    const SmtReport rep =
        smt_check(*ctx.sc.variety, *ctx.sc.family, ctx.sc.curve_f(), ctx.sc.r_grid, opts);
    if (rep.hypothesis) {
        res.status = CheckStatus::hypothesis_violated;
        res.message = rep.hypothesis->name + ": " + rep.hypothesis->detail;
        return res;
    }
    res.artifacts.push_back(write_artifact(ctx.out_dir, ctx.sc.id + "_smt.csv", smt_csv(rep)));
    std::ostringstream os;
    os << "coeff = " << to_string(rep.lhs_coeff) << ", min margin (r >= " << opts.margin_r0
       << ") = " << rep.min_margin;
    if (rep.at_threshold) os << " [at threshold, LHS vanishes]";
    res.message = os.str();
    if (rep.proportionality_checked > 0)
        res.message += "; Wronskian proportionality exact on " +
                       std::to_string(rep.proportionality_checked) + " subsets";
    if (!rep.margin_ok) {
        res.status = CheckStatus::fail;
        res.message += "; negative margin";
    } else if (!rep.trend_ok) {
        res.status = CheckStatus::fail;
        res.message += "; margin/T_f trend not monotone";
    } else if (!rep.proportionality_ok) {
        res.status = CheckStatus::fail;
        res.message += "; proportionality audit failed";
    }
    return res;
}

CheckResult check_claim(const CheckContext& ctx) {
    CheckResult res{"claim", CheckStatus::pass, "", {}};
    SmtOptions opts;
    opts.subspace_seed = ctx.sc.seeds.subspace;
    opts.quadrature = quad_options(ctx.sc);
    const SmtReport rep =
        smt_check(*ctx.sc.variety, *ctx.sc.family, ctx.sc.curve_f(), ctx.sc.r_grid, opts);
    if (rep.hypothesis) {
        res.status = CheckStatus::hypothesis_violated;
        res.message = rep.hypothesis->name + ": " + rep.hypothesis->detail;
        return res;
    }
    if (!rep.claim) {
        res.status = CheckStatus::inconclusive;
        res.message = "weight machinery inapplicable (q <= 2N - k + 1)";
        return res;
    }
    const ClaimReport& claim = *rep.claim;
    std::ostringstream csv;
    csv << "factor,nu_W,weighted_excess,ok\n";
    for (const auto& z : claim.zero_verdicts)
        csv << "\"" << z.factor.str() << "\"," << z.nu_w << "," << to_string(z.weighted_excess)
            << "," << (z.ok ? 1 : 0) << "\n";
    res.artifacts.push_back(
        write_artifact(ctx.out_dir, ctx.sc.id + "_claim_zeros.csv", csv.str()));

    std::ostringstream icsv;
    icsv << "r,LHS,RHS,margin\n";
    for (const auto& row : claim.integrated)
        icsv << format_csv_value(row.r) << "," << format_csv_value(row.lhs) << ","
             << format_csv_value(row.rhs) << "," << format_csv_value(row.rhs - row.lhs) << "\n";
    res.artifacts.push_back(
        write_artifact(ctx.out_dir, ctx.sc.id + "_claim_integrated.csv", icsv.str()));

    if (!claim.pointwise_ok || !claim.integrated_ok) {
        res.status = CheckStatus::fail;
        res.message = "multiplicity claim violated";
    } else {
        res.message = "pointwise claim holds at " + std::to_string(claim.zero_verdicts.size()) +
                      " zero classes; integrated claim holds on the grid";
    }
    return res;
}

CheckResult check_jensen(const CheckContext& ctx) {
    CheckResult res{"jensen", CheckStatus::pass, "", {}};
    const Family& fam = *ctx.sc.family;
    const auto radii = ctx.sc.r_grid.radii();
    const QuadratureOptions quad = quad_options(ctx.sc);

    std::ostringstream csv;
    csv << "i,pullback,residual\n";
    double worst = 0.0;
    for (int i = 0; i < fam.q(); ++i) {
        const Poly p =
            fam.member(static_cast<std::size_t>(i)).poly.substitute(ctx.sc.curve_f().components());
        if (p.degree() <= 0) continue;
        const double residual = jensen_check(p, radii, quad);
        worst = std::max(worst, residual);
        csv << (i + 1) << ",\"" << p.str() << "\"," << format_csv_value(residual) << "\n";
    }
    res.artifacts.push_back(write_artifact(ctx.out_dir, ctx.sc.id + "_jensen.csv", csv.str()));
    if (worst > ctx.sc.tolerances.jensen_residual) {
        res.status = CheckStatus::fail;
        res.message = "max residual " + format_csv_value(worst) + " exceeds tolerance";
    } else {
        res.message = "max residual " + format_csv_value(worst);
    }
    return res;
}

CheckResult check_comparability(const CheckContext& ctx) {
    CheckResult res{"comparability", CheckStatus::pass, "", {}};
    const ComparabilityReport rep =
        comparability_check(ctx.sc.curve_f(), ctx.sc.curve_g(), *ctx.sc.family, *ctx.sc.variety,
                            ctx.sc.r_grid, quad_options(ctx.sc));
    if (rep.hypothesis) {
        res.status = CheckStatus::hypothesis_violated;
        res.message = rep.hypothesis->name + ": " + rep.hypothesis->detail;
        return res;
    }
    std::ostringstream csv;
    csv << "r,ratio\n";
    for (std::size_t i = 0; i < rep.radii.size(); ++i)
        csv << format_csv_value(rep.radii[i]) << "," << format_csv_value(rep.ratio[i]) << "\n";
    res.artifacts.push_back(
        write_artifact(ctx.out_dir, ctx.sc.id + "_comparability.csv", csv.str()));
    std::ostringstream os;
    os << "T_f/T_g at r_max = " << rep.ratio_at_rmax << " (expected " << rep.expected << ")";
    res.message = os.str();
    if (!rep.within_tolerance) res.status = CheckStatus::fail;
    return res;
}

CheckResult check_unicity(const CheckContext& ctx) {
    CheckResult res{"unicity", CheckStatus::pass, "", {}};
    std::ostringstream msg;
    for (UnicityMode mode : {UnicityMode::a, UnicityMode::b}) {
        const UnicityReport rep =
            unicity_check(ctx.sc.curve_f(), ctx.sc.curve_g(), *ctx.sc.family, *ctx.sc.variety,
                          mode, ctx.sc.r_grid, quad_options(ctx.sc));
        const char tag = mode == UnicityMode::a ? 'a' : 'b';
        if (rep.hypothesis) {
            res.status = CheckStatus::hypothesis_violated;
            msg << "[" << tag <<"] " << rep.hypothesis->name << ": " << rep.hypothesis->detail
                << "; ";
            continue;
        }
        msg << "[" << tag << "] " << rep.summary << "; ";
        if (!rep.conclusion_ok && res.status == CheckStatus::pass)
            res.status = CheckStatus::fail;
    }
    res.message = msg.str();
    return res;
}

CheckResult check_corollary(const CheckContext& ctx) {
    CheckResult res{"corollary", CheckStatus::pass, "", {}};
    const CorollaryReport rep =
        corollary_demo(ctx.sc.curve_f(), ctx.sc.curve_g(), ctx.sc.hypersurfaces, ctx.sc.r_grid,
                       quad_options(ctx.sc));
    std::ostringstream os;
    os << "span dims k(f) = " << rep.span_dim_f << ", k(g) = " << rep.span_dim_g;
    if (rep.hypothesis) {
        res.status = CheckStatus::hypothesis_violated;
        os << "; " << rep.hypothesis->name << ": " << rep.hypothesis->detail;
        if (rep.separating_hyperplane)
            os << " (separating hyperplane " << rep.separating_hyperplane->str() << ")";
        res.message = os.str();
        return res;
    }
    os << "; gate q > " << to_string(rep.gate_threshold)
       << (rep.gate_ok ? " holds" : " fails") << "; "
       << (rep.f_equals_g ? "curves agree projectively" : "curves differ");
    res.message = os.str();
    if (!rep.ok()) res.status = CheckStatus::fail;
    return res;
}

CheckResult check_logderiv(const CheckContext& ctx) {
    CheckResult res{"logderiv", CheckStatus::pass, "", {}};
    const Family& fam = *ctx.sc.family;
    const auto radii = ctx.sc.r_grid.radii();
    const QuadratureOptions quad = quad_options(ctx.sc);
    const Monomial alpha{1u};

    std::ostringstream csv;
    csv << "r";
    std::vector<std::vector<double>> columns;
    std::vector<int> indexes;
    for (int i = 0; i < fam.q(); ++i) {
        const Poly p =
            fam.member(static_cast<std::size_t>(i)).poly.substitute(ctx.sc.curve_f().components());
        if (p.is_constant()) continue;
        columns.push_back(logderiv_trend(p, alpha, radii, quad));
        indexes.push_back(i + 1);
        csv << ",ratio_Q" << (i + 1);
    }
    csv << "\n";
    for (std::size_t r = 0; r < radii.size(); ++r) {
        csv << format_csv_value(radii[r]);
        for (const auto& col : columns) csv << "," << format_csv_value(col[r]);
        csv << "\n";
    }
    res.artifacts.push_back(write_artifact(ctx.out_dir, ctx.sc.id + "_logderiv.csv", csv.str()));

    bool finite = true;
    double last = 0.0;
    for (const auto& col : columns) {
        for (double v : col) finite &= std::isfinite(v);
        if (!col.empty()) last = std::max(last, col.back());
    }
    if (!finite) {
        res.status = CheckStatus::fail;
        res.message = "non-finite ratio encountered";
    } else {
        res.message = "max ratio at r_max = " + format_csv_value(last);
    }
    return res;
}

}  // namespace

RunReport run(const Scenario& scenario, std::span<const std::string> check_names,
              const std::filesystem::path& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.scenario_id = scenario.id;

    std::vector<std::string> selected(check_names.begin(), check_names.end());
    if (selected.empty()) selected = scenario.checks;

    const CheckContext ctx{scenario, out_dir};
    for (const std::string& name : selected) {
        CheckResult result;
        try {
            if (name == "hilbert") result = check_hilbert(ctx);
            else if (name == "position") result = check_position(ctx);
            else if (name == "nochka") result = check_nochka(ctx);
            else if (name == "wronskian") result = check_wronskian(ctx);
            else if (name == "smt") result = check_smt(ctx);
            else if (name == "claim") result = check_claim(ctx);
            else if (name == "jensen") result = check_jensen(ctx);
            else if (name == "comparability") result = check_comparability(ctx);
            else if (name == "unicity") result = check_unicity(ctx);
            else if (name == "corollary") result = check_corollary(ctx);
            else if (name == "logderiv") result = check_logderiv(ctx);
            else {
                result.name = name;
                result.status = CheckStatus::fail;
                result.message = "unknown check";
            }
        } catch (const InconclusiveError& e) {
            result.name = name;
            result.status = CheckStatus::inconclusive;
            result.message = e.what();
        } catch (const std::exception& e) {
            result.name = name;
            result.status = CheckStatus::fail;
            result.message = e.what();
        }
        report.results.push_back(std::move(result));
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void print_report(const RunReport& report, std::ostream& os) {
    os << "scenario " << report.scenario_id << "\n";
    for (const auto& r : report.results) {
        os << "  [" << to_string(r.status) << "] " << r.name;
        if (!r.message.empty()) os << ": " << r.message;
        os << "\n";
        for (const auto& a : r.artifacts) os << "      wrote " << a << "\n";
    }
    os << "  wall time " << report.wall_seconds << " s, exit code " << report.exit_code() << "\n";
}

}  // namespace vdw
