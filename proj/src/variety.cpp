#include "vdw/variety.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <numeric>

namespace vdw {

bool QuotClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

Variety::Variety(std::size_t ambient_n, int dim_k, std::vector<Poly> generators)
    : ambient_n_(ambient_n), dim_k_(dim_k), generators_(std::move(generators)) {
    if (dim_k_ < 0 || dim_k_ > static_cast<int>(ambient_n_))
        throw ValidationError("variety dimension must lie in [0, ambient_n]");
    for (const Poly& g : generators_) {
        if (g.nvars() != ambient_n_ + 1)
            throw ValidationError("variety generator has wrong variable count: " + g.str());
        if (!g.is_homogeneous())
            throw ValidationError("variety generator not homogeneous: " + g.str());
        if (g.is_zero()) throw ValidationError("variety generator is zero");
    }
    gb_ = buchberger(generators_);
    if (gb_.generators.empty()) gb_.nvars = ambient_n_ + 1;
}

Variety Variety::projective_space(std::size_t n) {
    return Variety(n, static_cast<int>(n), {});
}

const std::vector<Monomial>& Variety::standard_monomials(int d) const {
    if (d <= 0) throw ValidationError("standard_monomials: degree must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = standard_cache_.find(d);
    if (it != standard_cache_.end()) return it->second;

    std::vector<Monomial> standard;
    for (const Monomial& m : monomials_of_degree(ambient_n_ + 1, static_cast<unsigned>(d))) {
        bool divisible = false;
        for (const Poly& g : gb_.generators) {
            if (g.leading_monomial().divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) standard.push_back(m);
    }
    return standard_cache_.emplace(d, std::move(standard)).first->second;
}

int Variety::hilbert_function(int d) const {
    if (d <= 0) throw ValidationError("hilbert_function: degree must be positive");
    return static_cast<int>(standard_monomials(d).size());
}

QuotClass Variety::quot_class(const Poly& q) const {
    if (!q.is_homogeneous()) throw ValidationError("quot_class: inhomogeneous polynomial");
    if (q.is_zero()) throw ValidationError("quot_class: zero polynomial has no degree");
    if (q.nvars() != ambient_n_ + 1) throw ValidationError("quot_class: variable count mismatch");
    const int d = q.degree();
    const Poly nf = normal_form(q, gb_);
    const auto& basis = standard_monomials(d);

    QuotClass cls;
    cls.degree = d;
    cls.coords.assign(basis.size(), Rat(0));
    for (const auto& [m, c] : nf.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end())
            throw Error("quot_class: normal form contains a non-standard monomial");
        cls.coords[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return cls;
}

void Variety::validate_dimension() const {
    const int k = dim_k_;
    std::vector<Rat> values;
    for (int d = 1; d <= k + 2; ++d) values.emplace_back(hilbert_function(d));

    // Finite differences: after k rounds the two remaining values must agree
    // (vanishing (k+1)-st difference) and be positive (degree exactly k).
    std::vector<Rat> diff = values;
    for (int round = 0; round < k; ++round) {
        std::vector<Rat> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        diff = std::move(next);
    }
    if (diff.size() != 2) throw Error("validate_dimension: internal difference bookkeeping");
    if (diff[0] != diff[1])
        throw ValidationError(
            "Hilbert growth does not match the declared dimension (nonzero top difference)");
    if (diff[0] <= 0)
        throw ValidationError(
            "Hilbert growth has degree below the declared dimension (vanishing leading term)");
}

EmptinessResult projective_empty(const std::vector<Poly>& gens, int degree_cap, int height_cap) {
    if (gens.empty()) throw ValidationError("projective_empty: no generators");
    const std::size_t nvars = gens[0].nvars();
    for (const Poly& g : gens) {
        if (g.nvars() != nvars) throw ValidationError("projective_empty: variable count mismatch");
        if (!g.is_homogeneous())
            throw ValidationError("projective_empty: inhomogeneous generator " + g.str());
    }

    std::vector<Poly> nonzero;
    for (const Poly& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    const GroebnerBasis gb = buchberger(nonzero);

    EmptinessResult res;

    // Emptiness certificate: some power of every variable lies in the ideal.
    bool all_vars_certified = true;
    int max_power = 0;
    for (std::size_t v = 0; v < nvars && all_vars_certified; ++v) {
        bool found = false;
        Poly p = Poly::variable(nvars, v);
        for (int e = 1; e <= degree_cap; ++e) {
            if (normal_form(p, gb).is_zero()) {
                found = true;
                max_power = std::max(max_power, e);
                break;
            }
            p = p * Poly::variable(nvars, v);
        }
        all_vars_certified = found;
    }
    if (all_vars_certified) {
        res.verdict = Emptiness::empty;
        res.certificate_degree = max_power;
        return res;
    }

    // Witness search: normalized projective points, chart by chart, with
    // fraction coordinates of bounded height.
    std::vector<Rat> values;
    values.emplace_back(0);
    for (int den = 1; den <= height_cap; ++den)
        for (int num = 1; num <= height_cap; ++num) {
            Rat v = make_rat(num, den);
            if (std::find(values.begin(), values.end(), v) == values.end()) {
                values.push_back(v);
                values.push_back(-v);
            }
        }

    for (std::size_t chart = 0; chart < nvars; ++chart) {
        const std::size_t free_tail = nvars - chart - 1;
        std::vector<std::size_t> idx(free_tail, 0);
        while (true) {
            RatVec point(nvars, Rat(0));
            point[chart] = 1;
            for (std::size_t j = 0; j < free_tail; ++j) point[chart + 1 + j] = values[idx[j]];
            bool all_zero = true;
            for (const Poly& g : nonzero) {
                if (g.eval(std::span<const Rat>(point)) != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) {
                res.verdict = Emptiness::nonempty;
                res.witness = point;
                return res;
            }
            std::size_t j = 0;
            while (j < free_tail) {
                if (++idx[j] < values.size()) break;
                idx[j] = 0;
                ++j;
            }
            if (j == free_tail) break;
        }
    }

    res.verdict = Emptiness::inconclusive;
    return res;
}

}  // namespace vdw
