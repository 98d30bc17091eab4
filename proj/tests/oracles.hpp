// Test-only oracles, independent of the library implementation paths they
// cross-check: cofactor determinants, textbook Euclid, the gcd-chain
// squarefree split, and seeded random polynomial generators.
#pragma once

#include "vdw/poly.hpp"
#include "vdw/rng.hpp"

#include <vector>

namespace oracle {

/// Recursive cofactor expansion along the first row.
inline vdw::Poly cofactor_det(const std::vector<std::vector<vdw::Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    const std::size_t nvars = m[0][0].nvars();
    vdw::Poly acc(nvars);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<vdw::Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<vdw::Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        vdw::Poly term = m[0][j] * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Plain recursive Euclid, monic result.
inline vdw::Poly euclid_gcd(const vdw::Poly& a, const vdw::Poly& b) {
    if (b.is_zero()) return vdw::monic(a);
    return euclid_gcd(b, vdw::divmod_univariate(a, b).second);
}

/// Squarefree split by the naive gcd chain g_0 = p, g_{i+1} = gcd(g_i, g_i').
inline std::vector<std::pair<vdw::Poly, int>> gcd_chain_squarefree(const vdw::Poly& p) {
    std::vector<vdw::Poly> chain{vdw::monic(p)};
    while (chain.back().degree() > 0)
        chain.push_back(vdw::gcd_univariate(chain.back(), chain.back().derivative(0)));
    // chain[i] / chain[i+1] = product of factors with multiplicity > i.
    std::vector<vdw::Poly> w;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        w.push_back(vdw::divmod_univariate(chain[i], chain[i + 1]).first);
    std::vector<std::pair<vdw::Poly, int>> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const vdw::Poly f = vdw::divmod_univariate(w[i], w[i + 1]).first;
        if (f.degree() > 0) out.emplace_back(f, static_cast<int>(i) + 1);
    }
    if (!w.empty() && w.back().degree() > 0)
        out.emplace_back(w.back(), static_cast<int>(w.size()));
    return out;
}

/// Random polynomial with integer coefficients in [-bound, bound].
inline vdw::Poly random_poly(vdw::Rng& rng, std::size_t nvars, unsigned max_degree,
                             long bound = 4, double keep_probability = 0.7) {
    vdw::Poly p(nvars);
    for (const auto& m : vdw::monomials_up_to_degree(nvars, max_degree)) {
        if (rng.unit() > keep_probability) continue;
        const long c = rng.int_in(-bound, bound);
        if (c != 0) p.add_term(m, vdw::Rat(c));
    }
    return p;
}

inline vdw::Poly random_nonzero_poly(vdw::Rng& rng, std::size_t nvars, unsigned max_degree,
                                     long bound = 4) {
    while (true) {
        vdw::Poly p = random_poly(rng, nvars, max_degree, bound);
        if (!p.is_zero()) return p;
    }
}

}  // namespace oracle
