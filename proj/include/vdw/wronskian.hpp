#pragma once

#include "vdw/poly.hpp"
#include "vdw/ratmat.hpp"

#include <span>
#include <vector>

namespace vdw {

/// Derivative multi-indices making the generalized Wronskian of a function
/// tuple not identically zero. The first index is always zero and the set is
/// downward closed, which makes the scaling identity
/// det(D^a (h phi_j)) = h^{#phi} det(D^a phi_j) hold identically.
struct AdmissibleSet {
    std::vector<Monomial> alphas;
    int cap = 0;
};

/// First admissible set for the tuple, searching downward-closed index sets
/// in the canonical enumeration order with every |alpha| <= cap. The tuple
/// must be linearly independent over the rationals (checked exactly).
AdmissibleSet find_admissible(std::span<const Poly> phi, int cap);

/// det(D^{alpha_i} phi_j), rows indexed by derivatives.
Poly wronskian_det(std::span<const Poly> phi, const AdmissibleSet& a);

/// Exact verdict of det(D^a (h phi_j)) == h^{#phi} det(D^a phi_j).
bool scaling_check(std::span<const Poly> phi, const Poly& h, const AdmissibleSet& a);

/// For tuples relating one basis of pullbacks to another by the exact linear
/// change of basis determined by their class coordinates: returns
/// C = det(change of basis) and asserts the Wronskian identity W_r0 = C * W
/// symbolically. The class matrices are (functions x coordinates); the basis
/// side must be invertible.
Rat proportionality_constant(std::span<const Poly> r0_funcs, const RatMat& r0_classes,
                             std::span<const Poly> basis_funcs, const RatMat& basis_classes,
                             const AdmissibleSet& a);

}  // namespace vdw
