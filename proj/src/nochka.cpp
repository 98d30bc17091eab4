#include "vdw/nochka.hpp"

#include "vdw/error.hpp"
#include "vdw/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace vdw {

namespace {

void for_each_subset(int q, int size, const std::function<void(const std::vector<int>&)>& fn) {
    if (size > q || size <= 0) return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int j = size - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == q - size + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < size; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

int rank_of_subset(const std::vector<RatVec>& vectors, std::span<const int> subset) {
    std::vector<RatVec> rows;
    rows.reserve(subset.size());
    for (int i : subset) rows.push_back(vectors[static_cast<std::size_t>(i)]);
    return static_cast<int>(rank_of_rows(rows));
}

std::string subset_str(std::span<const int> subset) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
    os << "}";
    return os.str();
}

}  // namespace

WeightSystem::WeightSystem(RatVec omegas, Rat omega_tilde, int n_subgeneral, int dim_k,
                           std::vector<RatVec> vectors)
    : omegas_(std::move(omegas)),
      omega_tilde_(std::move(omega_tilde)),
      N_(n_subgeneral),
      k_(dim_k),
      vectors_(std::move(vectors)) {
    if (omegas_.size() != vectors_.size())
        throw ValidationError("weight system: weight/vector count mismatch");
}

int WeightSystem::rank(std::span<const int> subset) const {
    return rank_of_subset(vectors_, subset);
}

Rat WeightSystem::sum_identity_rhs() const {
    return omega_tilde_ * Rat(q() - 2 * N_ + k_ - 1) + Rat(k_ + 1);
}

WeightSystem compute_weights(const std::vector<RatVec>& vectors, int n_subgeneral, int dim_k) {
    const int q = static_cast<int>(vectors.size());
    const int N = n_subgeneral;
    const int k = dim_k;
    if (q <= 2 * N - k + 1)
        throw ValidationError("compute_weights: requires q > 2N - k + 1, got q = " +
                              std::to_string(q));
    for (const RatVec& v : vectors) {
        if (std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; }))
            throw ValidationError("compute_weights: zero vector in family");
    }
    bool position_ok = true;
    std::vector<int> bad_subset;
    for_each_subset(q, N + 1, [&](const std::vector<int>& subset) {
        if (!position_ok) return;
        if (rank_of_subset(vectors, subset) < k + 1) {
            position_ok = false;
            bad_subset = subset;
        }
    });
    if (!position_ok)
        throw ValidationError("compute_weights: subset " + subset_str(bad_subset) +
                              " has rank below k + 1; family is not in N-subgeneral position");

    // Variables x = (omega_1..omega_q, t).
    const std::size_t nv = static_cast<std::size_t>(q) + 1;
    const std::size_t t_ix = static_cast<std::size_t>(q);
    const Rat t_lower = make_rat(k + 1, 2 * N - k + 1);
    const Rat t_upper = make_rat(k, N);

    std::vector<lp::Constraint> base;
    {
        // Coupling identity.
        lp::Constraint c;
        c.coeffs.assign(nv, Rat(1));
        c.coeffs[t_ix] = Rat(-(q - 2 * N + k - 1));
        c.rel = lp::Rel::eq;
        c.rhs = Rat(k + 1);
        base.push_back(std::move(c));
    }
    for (int i = 0; i < q; ++i) {
        lp::Constraint cap;  // omega_i <= t
        cap.coeffs.assign(nv, Rat(0));
        cap.coeffs[static_cast<std::size_t>(i)] = 1;
        cap.coeffs[t_ix] = -1;
        cap.rel = lp::Rel::le;
        cap.rhs = 0;
        base.push_back(std::move(cap));

        lp::Constraint one;  // omega_i <= 1
        one.coeffs.assign(nv, Rat(0));
        one.coeffs[static_cast<std::size_t>(i)] = 1;
        one.rel = lp::Rel::le;
        one.rhs = 1;
        base.push_back(std::move(one));
    }
    for (int size = 2; size <= std::min(N + 1, q); ++size) {
        for_each_subset(q, size, [&](const std::vector<int>& subset) {
            lp::Constraint c;
            c.coeffs.assign(nv, Rat(0));
            for (int i : subset) c.coeffs[static_cast<std::size_t>(i)] = 1;
            c.rel = lp::Rel::le;
            c.rhs = Rat(rank_of_subset(vectors, subset));
            base.push_back(std::move(c));
        });
    }

    auto solve_with_t_range = [&](const Rat& lo, const Rat& hi,
                                  const std::vector<std::pair<int, Rat>>& fixed,
                                  const RatVec& objective,
                                  const std::vector<lp::Constraint>& extra = {}) {
        std::vector<lp::Constraint> cs = base;
        cs.insert(cs.end(), extra.begin(), extra.end());
        {
            lp::Constraint c;
            c.coeffs.assign(nv, Rat(0));
            c.coeffs[t_ix] = 1;
            c.rel = lp::Rel::ge;
            c.rhs = lo;
            cs.push_back(std::move(c));
        }
        {
            lp::Constraint c;
            c.coeffs.assign(nv, Rat(0));
            c.coeffs[t_ix] = 1;
            c.rel = lp::Rel::le;
            c.rhs = hi;
            cs.push_back(std::move(c));
        }
        for (const auto& [ix, val] : fixed) {
            lp::Constraint c;
            c.coeffs.assign(nv, Rat(0));
            c.coeffs[static_cast<std::size_t>(ix)] = 1;
            c.rel = lp::Rel::eq;
            c.rhs = val;
            cs.push_back(std::move(c));
        }
        return lp::solve(nv, cs, objective);
    };

    // Floor pass: the largest uniform lower bound on the weights at this
    // cap. Lexicographic minimization alone can park a weight at zero even
    // when strictly positive systems exist; the floor keeps item i) intact
    // without giving up determinism.
    auto weight_floor = [&](const Rat& t_fixed) -> std::optional<Rat> {
        const std::size_t floor_nv = nv + 1;
        const std::size_t m_ix = nv;
        std::vector<lp::Constraint> cs;
        for (const lp::Constraint& c : base) {
            lp::Constraint widened;
            widened.coeffs = c.coeffs;
            widened.coeffs.push_back(Rat(0));
            widened.rel = c.rel;
            widened.rhs = c.rhs;
            cs.push_back(std::move(widened));
        }
        for (int i = 0; i < q; ++i) {
            lp::Constraint c;  // omega_i - m >= 0
            c.coeffs.assign(floor_nv, Rat(0));
            c.coeffs[static_cast<std::size_t>(i)] = 1;
            c.coeffs[m_ix] = -1;
            c.rel = lp::Rel::ge;
            c.rhs = 0;
            cs.push_back(std::move(c));
        }
        {
            lp::Constraint c;  // t fixed
            c.coeffs.assign(floor_nv, Rat(0));
            c.coeffs[t_ix] = 1;
            c.rel = lp::Rel::eq;
            c.rhs = t_fixed;
            cs.push_back(std::move(c));
        }
        RatVec obj(floor_nv, Rat(0));
        obj[m_ix] = -1;  // maximize m
        auto r = lp::solve(floor_nv, cs, obj);
        if (r.status != lp::Status::optimal) return std::nullopt;
        return r.x[m_ix];
    };

    auto lex_minimize = [&](const Rat& t_fixed, const Rat& floor_value)
        -> std::optional<RatVec> {
        std::vector<lp::Constraint> floors;
        for (int i = 0; i < q; ++i) {
            lp::Constraint c;  // omega_i >= floor
            c.coeffs.assign(nv, Rat(0));
            c.coeffs[static_cast<std::size_t>(i)] = 1;
            c.rel = lp::Rel::ge;
            c.rhs = floor_value;
            floors.push_back(std::move(c));
        }
        std::vector<std::pair<int, Rat>> fixed;
        RatVec solution;
        for (int i = 0; i < q; ++i) {
            RatVec obj(nv, Rat(0));
            obj[static_cast<std::size_t>(i)] = 1;
            auto r = solve_with_t_range(t_fixed, t_fixed, fixed, obj, floors);
            if (r.status != lp::Status::optimal) return std::nullopt;
            fixed.emplace_back(i, r.x[static_cast<std::size_t>(i)]);
            solution = r.x;
        }
        return solution;
    };

    // Minimize t first.
    RatVec t_obj(nv, Rat(0));
    t_obj[t_ix] = 1;
    auto first = solve_with_t_range(t_lower, t_upper, {}, t_obj);
    if (first.status != lp::Status::optimal)
        throw Error("compute_weights: weight program infeasible");
    Rat t_star = first.x[t_ix];

    RatVec omegas;
    for (int round = 0; round < 4; ++round) {
        auto floor_value = weight_floor(t_star);
        if (!floor_value || *floor_value <= 0)
            throw Error("compute_weights: no strictly positive system at t = " +
                        to_string(t_star));
        auto sol = lex_minimize(t_star, *floor_value);
        if (!sol) throw Error("compute_weights: weight program infeasible at t = " +
                              to_string(t_star));
        omegas.assign(sol->begin(), sol->begin() + q);
        Rat max_omega = omegas[0];
        for (const Rat& w : omegas) max_omega = std::max(max_omega, w);
        if (max_omega == t_star) break;
        // The cap exceeded the achieved maximum; pin it down and re-solve so
        // that omega_tilde really is the maximum weight.
        t_star = max_omega;
    }

    for (const Rat& w : omegas)
        if (w <= 0)
            throw Error("compute_weights: degenerate optimum with a non-positive weight");

    return WeightSystem(std::move(omegas), t_star, N, k, vectors);
}

WeightReport verify_weights(const WeightSystem& ws) {
    WeightReport rep;
    const int q = ws.q();
    const int N = ws.N();
    const int k = ws.k();

    rep.positivity_ok = true;
    Rat max_omega(0);
    Rat sum(0);
    for (const Rat& w : ws.omegas()) {
        if (w <= 0 || w > 1) rep.positivity_ok = false;
        max_omega = std::max(max_omega, w);
        sum += w;
    }

    rep.sum_identity_ok = (max_omega == ws.omega_tilde()) && (sum == ws.sum_identity_rhs());

    const Rat lo = make_rat(k + 1, 2 * N - k + 1);
    const Rat hi = make_rat(k, N);
    rep.bounds_ok = (lo <= ws.omega_tilde()) && (ws.omega_tilde() <= hi);

    rep.subset_sums_ok = true;
    for (int size = 1; size <= std::min(N + 1, q); ++size) {
        for_each_subset(q, size, [&](const std::vector<int>& subset) {
            Rat s(0);
            for (int i : subset) s += ws.omegas()[static_cast<std::size_t>(i)];
            if (s > Rat(ws.rank(subset))) {
                rep.subset_sums_ok = false;
                rep.violating_subsets.push_back(subset);
            }
        });
    }
    return rep;
}

std::vector<int> select_R0(std::span<const int> r, std::span<const double> e_values,
                           const WeightSystem& ws) {
    if (static_cast<int>(r.size()) != ws.N() + 1)
        throw ValidationError("select_R0: subset size must be N + 1");
    for (int i : r) {
        if (i < 0 || i >= ws.q()) throw ValidationError("select_R0: index out of range");
        if (e_values[static_cast<std::size_t>(i)] < 1.0)
            throw ValidationError("select_R0: all E values must be at least 1");
    }

    const int want = ws.k() + 1;
    std::vector<int> best;
    double best_log = -1.0;
    std::vector<int> pick(static_cast<std::size_t>(want));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == want) {
            if (ws.rank(pick) != want) return;
            double lg = 0.0;
            for (int i : pick) lg += std::log(e_values[static_cast<std::size_t>(i)]);
            if (best.empty() || lg > best_log) {
                best = pick;
                best_log = lg;
            }
            return;
        }
        for (int t = start; t < static_cast<int>(r.size()); ++t) {
            pick[static_cast<std::size_t>(depth)] = r[static_cast<std::size_t>(t)];
            rec(t + 1, depth + 1);
        }
    };
    rec(0, 0);
    if (best.empty())
        throw Error("select_R0: no full-rank (k+1)-subset exists; weight system is inconsistent");

    double weighted = 0.0;
    for (int i : r)
        weighted += to_double(ws.omegas()[static_cast<std::size_t>(i)]) *
                    std::log(e_values[static_cast<std::size_t>(i)]);
    const double guard = 1e-9 * std::max(1.0, std::abs(weighted));
    if (weighted > best_log + guard)
        throw Error("select_R0: weighted product exceeds the selected subset product");
    return best;
}

}  // namespace vdw
