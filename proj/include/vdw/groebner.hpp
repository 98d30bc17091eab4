#pragma once

#include "vdw/poly.hpp"

#include <vector>

namespace vdw {

/// Groebner basis under the global graded-lex order. When `reduced` is set
/// the generators form the unique reduced basis: monic leads, and no monomial
/// of any generator is divisible by the lead of another.
struct GroebnerBasis {
    std::size_t nvars = 0;
    std::vector<Poly> generators;
    bool reduced = false;
};

/// Buchberger's algorithm for homogeneous input. Pairs with coprime leading
/// monomials are skipped; the result is interreduced to the reduced basis.
/// Every input generator reduces to zero against the output (checked), which
/// certifies ideal equality together with the construction.
GroebnerBasis buchberger(std::vector<Poly> gens);

/// Remainder of full division by the basis: no monomial of the result is
/// divisible by any generator's lead, and p minus the result lies in the
/// ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

}  // namespace vdw
