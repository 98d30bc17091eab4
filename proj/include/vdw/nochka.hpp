#pragma once

#include "vdw/ratmat.hpp"

#include <span>
#include <vector>

namespace vdw {

/// Nochka weight system for a family of nonzero vectors in N-subgeneral
/// position: positive rational weights omega_i with maximum omega_tilde,
/// tied together by the exact identity
///     sum omega_i = omega_tilde * (q - 2N + k - 1) + k + 1
/// and bounded subset sums. The defining vectors are retained as the rank
/// oracle for verification and subset selection.
class WeightSystem {
public:
    WeightSystem(RatVec omegas, Rat omega_tilde, int n_subgeneral, int dim_k,
                 std::vector<RatVec> vectors);

    int q() const { return static_cast<int>(omegas_.size()); }
    int N() const { return N_; }
    int k() const { return k_; }
    const RatVec& omegas() const { return omegas_; }
    const Rat& omega_tilde() const { return omega_tilde_; }
    const std::vector<RatVec>& vectors() const { return vectors_; }

    int rank(std::span<const int> subset) const;
    /// omega_tilde * (q - 2N + k - 1) + k + 1.
    Rat sum_identity_rhs() const;

private:
    RatVec omegas_;
    Rat omega_tilde_;
    int N_;
    int k_;
    std::vector<RatVec> vectors_;
};

/// Computes a weight system by exact linear programming: minimize the weight
/// cap t subject to the sum identity, the bounds on t, per-subset sums
/// bounded by subset rank for all subsets of size <= N+1, and omega_i <= t;
/// ties broken by lexicographic minimization of the weights. Requires
/// q > 2N - k + 1 and every (N+1)-subset of rank >= k+1 (checked). Throws
/// ValidationError when the position precondition fails and Error when the
/// program is infeasible.
WeightSystem compute_weights(const std::vector<RatVec>& vectors, int n_subgeneral, int dim_k);

struct WeightReport {
    bool positivity_ok = false;    // 0 < omega_i <= 1
    bool sum_identity_ok = false;  // the coupling identity, exactly
    bool bounds_ok = false;        // (k+1)/(2N-k+1) <= omega_tilde <= k/N
    bool subset_sums_ok = false;   // sum over R <= rank(R), all |R| <= N+1
    std::vector<std::vector<int>> violating_subsets;

    bool ok() const { return positivity_ok && sum_identity_ok && bounds_ok && subset_sums_ok; }
};

/// Exhaustive exact re-check of every certified property.
WeightReport verify_weights(const WeightSystem& ws);

/// Given values E_i >= 1 and a subset R of size N+1, returns the full-rank
/// (k+1)-subset of R maximizing prod E_i (ties by lexicographic order) and
/// asserts prod_{i in R} E_i^{omega_i} <= prod_{i in R0} E_i.
std::vector<int> select_R0(std::span<const int> r, std::span<const double> e_values,
                           const WeightSystem& ws);

}  // namespace vdw
