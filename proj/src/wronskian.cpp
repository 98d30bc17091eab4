#include "vdw/wronskian.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace vdw {

namespace {

/// Coefficient matrix of the tuple over the union of its monomials.
RatMat coefficient_matrix(std::span<const Poly> phi) {
    std::map<Monomial, std::size_t, GrlexGreater> columns;
    for (const Poly& p : phi)
        for (const auto& [m, c] : p.terms()) columns.emplace(m, 0);
    std::size_t ix = 0;
    for (auto& [m, col] : columns) col = ix++;
    RatMat mat(phi.size(), columns.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (const auto& [m, c] : phi[i].terms()) mat.at(i, columns[m]) = c;
    return mat;
}

bool downward_closed(const std::vector<Monomial>& set) {
    for (const Monomial& alpha : set) {
        for (std::size_t v = 0; v < alpha.nvars(); ++v) {
            if (alpha[v] == 0) continue;
            std::vector<unsigned> exps = alpha.exponents();
            exps[v] -= 1;
            const Monomial below{std::move(exps)};
            if (std::find(set.begin(), set.end(), below) == set.end()) return false;
        }
    }
    return true;
}

std::vector<std::vector<Poly>> derivative_matrix(std::span<const Poly> phi,
                                                 const std::vector<Monomial>& alphas) {
    std::vector<std::vector<Poly>> m;
    m.reserve(alphas.size());
    for (const Monomial& alpha : alphas) {
        std::vector<Poly> row;
        row.reserve(phi.size());
        for (const Poly& p : phi) row.push_back(p.derivative(alpha));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

AdmissibleSet find_admissible(std::span<const Poly> phi, int cap) {
    if (phi.empty()) throw ValidationError("find_admissible: empty tuple");
    const std::size_t count = phi.size();
    const std::size_t m = phi[0].nvars();
    for (const Poly& p : phi)
        if (p.nvars() != m) throw ValidationError("find_admissible: variable count mismatch");
    if (cap < 0) throw ValidationError("find_admissible: negative cap");

    if (rank(coefficient_matrix(phi)) != count)
        throw ValidationError("find_admissible: tuple is linearly dependent over the rationals");

    const std::vector<Monomial> candidates =
        monomials_up_to_degree(m, static_cast<unsigned>(cap));
    if (candidates.size() < count)
        throw Error("find_admissible: cap admits fewer multi-indices than functions");

    // Increasing index tuples starting at the zero multi-index, filtered to
    // downward-closed sets, first nonvanishing determinant wins.
    std::vector<std::size_t> pick(count);
    pick[0] = 0;
    std::optional<AdmissibleSet> found;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (found) return;
        if (depth == count) {
            std::vector<Monomial> alphas;
            alphas.reserve(count);
            for (std::size_t ix : pick) alphas.push_back(candidates[ix]);
            if (!downward_closed(alphas)) return;
            AdmissibleSet a{alphas, cap};
            if (!wronskian_det(phi, a).is_zero()) found = std::move(a);
            return;
        }
        for (std::size_t ix = start; ix < candidates.size(); ++ix) {
            pick[depth] = ix;
            rec(ix + 1, depth + 1);
            if (found) return;
        }
    };
    rec(1, 1);

    if (!found)
        throw Error("find_admissible: no admissible set within cap " + std::to_string(cap) +
                    "; this contradicts independence of the tuple");
    return *found;
}

Poly wronskian_det(std::span<const Poly> phi, const AdmissibleSet& a) {
    if (phi.size() != a.alphas.size())
        throw ValidationError("wronskian_det: tuple and multi-index counts differ");
    return det_poly_matrix(derivative_matrix(phi, a.alphas));
}

bool scaling_check(std::span<const Poly> phi, const Poly& h, const AdmissibleSet& a) {
    std::vector<Poly> scaled;
    scaled.reserve(phi.size());
    for (const Poly& p : phi) scaled.push_back(p * h);
    const Poly lhs = wronskian_det(scaled, a);
    const Poly rhs = h.pow(static_cast<unsigned>(phi.size())) * wronskian_det(phi, a);
    return lhs == rhs;
}

Rat proportionality_constant(std::span<const Poly> r0_funcs, const RatMat& r0_classes,
                             std::span<const Poly> basis_funcs, const RatMat& basis_classes,
                             const AdmissibleSet& a) {
    if (r0_funcs.size() != basis_funcs.size())
        throw ValidationError("proportionality_constant: function counts differ");
    if (basis_classes.rows() != basis_classes.cols())
        throw ValidationError("proportionality_constant: basis class matrix must be square");

    // [r0_i] = sum_j C_ij [basis_j]  =>  C = r0_classes * basis_classes^{-1}.
    auto inv = inverse(basis_classes);
    if (!inv)
        throw Error("proportionality_constant: basis class matrix is singular");
    const RatMat c = r0_classes * *inv;
    const Rat c_det = det(c);
    if (c_det == 0)
        throw Error("proportionality_constant: change of basis is singular");

    const Poly w = wronskian_det(basis_funcs, a);
    const Poly w_r0 = wronskian_det(r0_funcs, a);
    if (!(w_r0 == w * c_det))
        throw Error("proportionality_constant: Wronskian identity failed symbolically");
    return c_det;
}

}  // namespace vdw
