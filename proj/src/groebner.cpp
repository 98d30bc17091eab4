#include "vdw/groebner.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <deque>

namespace vdw {

namespace {

Poly reduce_once(const Poly& p, const std::vector<Poly>& basis, bool* changed) {
    // Cancels the graded-lex greatest reducible monomial of p, scanning the
    // basis in order for determinism.
    for (const auto& [m, c] : p.terms()) {
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            auto q = m.quotient_by(g.leading_monomial());
            if (!q) continue;
            *changed = true;
            return p - Poly::from_term(*q, c / g.leading_coeff()) * g;
        }
    }
    *changed = false;
    return p;
}

Poly full_reduce(Poly p, const std::vector<Poly>& basis) {
    bool changed = true;
    while (changed && !p.is_zero()) p = reduce_once(p, basis, &changed);
    return p;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const Poly tf = Poly::from_term(*l.quotient_by(f.leading_monomial()), 1 / f.leading_coeff());
    const Poly tg = Poly::from_term(*l.quotient_by(g.leading_monomial()), 1 / g.leading_coeff());
    return tf * f - tg * g;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Poly> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }),
               gens.end());

    GroebnerBasis gb;
    if (gens.empty()) {
        gb.reduced = true;
        return gb;
    }
    gb.nvars = gens[0].nvars();
    for (const Poly& g : gens) {
        if (g.nvars() != gb.nvars) throw Error("buchberger: variable count mismatch");
        if (!g.is_homogeneous())
            throw Error("buchberger: inhomogeneous generator " + g.str());
    }

    std::vector<Poly> basis;
    for (const Poly& g : gens) basis.push_back(monic(g));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    auto pick_pair = [&]() {
        // Normal strategy: smallest lcm degree first, ties by index.
        std::size_t best = 0;
        unsigned best_deg =
            Monomial::lcm(basis[pairs[0].first].leading_monomial(),
                          basis[pairs[0].second].leading_monomial())
                .degree();
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const unsigned d = Monomial::lcm(basis[pairs[k].first].leading_monomial(),
                                             basis[pairs[k].second].leading_monomial())
                                   .degree();
            if (d < best_deg) {
                best = k;
                best_deg = d;
            }
        }
        auto p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    };

    while (!pairs.empty()) {
        const auto [i, j] = pick_pair();
        if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
        Poly s = full_reduce(s_polynomial(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        basis.push_back(monic(s));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Interreduce to the unique reduced basis.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!basis[j].leading_monomial().divides(basis[i].leading_monomial())) continue;
            if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = full_reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(monic(r));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        return grlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    gb.generators = std::move(reduced);
    gb.reduced = true;

    for (const Poly& g : gens) {
        if (!normal_form(g, gb).is_zero())
            throw Error("buchberger: input generator fails to reduce to zero");
    }
    return gb;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    if (!gb.generators.empty() && p.nvars() != gb.nvars)
        throw Error("normal_form: variable count mismatch");
    return full_reduce(p, gb.generators);
}

}  // namespace vdw
