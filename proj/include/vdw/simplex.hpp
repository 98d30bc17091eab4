#pragma once

#include "vdw/rat.hpp"

#include <vector>

namespace vdw::lp {

enum class Status { optimal, infeasible, unbounded };

enum class Rel { le, eq, ge };

struct Constraint {
    RatVec coeffs;
    Rel rel = Rel::le;
    Rat rhs;
};

struct Result {
    Status status = Status::infeasible;
    RatVec x;
    Rat objective;
};

/// Minimize objective . x subject to the constraints and x >= 0, in exact
/// rational arithmetic. Two-phase dense simplex with Bland's rule, so it
/// terminates on every input.
Result solve(std::size_t nvars, const std::vector<Constraint>& constraints,
             const RatVec& objective);

}  // namespace vdw::lp
