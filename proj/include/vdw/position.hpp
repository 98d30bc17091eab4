#pragma once

#include "vdw/curve_fwd.hpp"
#include "vdw/variety.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vdw {

/// Hypersurface of P^n: a homogeneous form together with its degree.
struct Hypersurface {
    Poly poly;
    int degree = 0;
};

/// Finite family of hypersurfaces measured against one variety. On
/// construction every member is raised to the common degree d = lcm(d_i) and
/// its quotient class there is cached; a member whose class vanishes is
/// rejected.
class Family {
public:
    Family(std::vector<Hypersurface> members, int N, const Variety& v);

    int q() const { return static_cast<int>(members_.size()); }
    int N() const { return N_; }
    int common_degree() const { return common_degree_; }
    const std::vector<Hypersurface>& members() const { return members_; }
    const Hypersurface& member(std::size_t i) const { return members_.at(i); }

    /// Q_i raised to d / d_i.
    const Poly& lifted_power(std::size_t i) const { return lifted_powers_.at(i); }
    /// Class of the lifted power in the common degree.
    const QuotClass& lifted_class(std::size_t i) const { return lifted_.at(i); }
    std::vector<RatVec> lifted_vectors() const;

private:
    std::vector<Hypersurface> members_;
    int N_;
    int common_degree_;
    std::vector<Poly> lifted_powers_;
    std::vector<QuotClass> lifted_;
};

struct SubsetVerdict {
    std::vector<int> subset;
    Emptiness verdict = Emptiness::inconclusive;
    std::optional<RatVec> witness;
};

struct PositionCertificate {
    bool is_subgeneral = false;
    std::optional<std::vector<int>> failing_subset;
    std::vector<SubsetVerdict> verdicts;
};

struct EmptinessOptions {
    /// 0 selects the default d*(N+1) + n + 1.
    int degree_cap = 0;
    int height_cap = 3;
};

/// N-subgeneral position test: every (N+1)-subset of the family must miss V.
/// Runs the emptiness decision on generators(V) together with each subset and
/// records every verdict. An inconclusive subset is an error naming it.
PositionCertificate check_subgeneral(const Family& f, const Variety& v,
                                     const EmptinessOptions& opts = {});

/// Exact rank of the lifted classes indexed by `subset`.
int rank_classes(std::span<const int> subset, const Family& f);

/// Restriction of class functionals to a subspace spanned by the given basis
/// vectors: w_i = B^T v_i.
std::vector<RatVec> restrict_to_subspace(const std::vector<RatVec>& vectors,
                                         const std::vector<RatVec>& basis);

/// Basis of a subspace L of the common-degree class space with dim L =
/// target_dim, not contained in any member's hyperplane and preserving the
/// rank of every subset of size <= target_dim under restriction. Randomized
/// with exact verification; deterministic per seed.
std::vector<RatVec> generic_subspace(const Family& f, const Variety& v, int target_dim,
                                     std::uint64_t seed);

/// Completion forms: H_V(d) - k - 1 degree-d forms whose classes extend every
/// full-rank (k+1)-subset of the family to a basis of the class space
/// simultaneously. Randomized with exact verification; deterministic per
/// seed. r0 must itself be a full-rank (k+1)-subset.
std::vector<Poly> complete_basis(std::span<const int> r0, const Family& f, const Variety& v,
                                 std::uint64_t seed);

/// All (k+1)-subsets of the family whose classes have rank k+1.
std::vector<std::vector<int>> full_rank_subsets(const Family& f, const Variety& v);

/// Internal verification used by complete_basis, exposed for fault-injection
/// tests: every listed subset together with the candidate classes must have
/// full rank.
bool completion_spans(const std::vector<std::vector<int>>& subsets, const Family& f,
                      const std::vector<RatVec>& candidate_classes, int full_dim);

struct PositionConstants {
    double alpha_est = 0.0;
    double beta_est = 0.0;
};

/// Sampled bounds of h(x) = max_{i in subset} |Q_i(x)| / ||x||^d over points
/// of V (homogeneous coordinates). The subset must miss V, which the caller
/// is expected to have certified.
PositionConstants position_constants(std::span<const int> subset, const Family& f,
                                     std::span<const std::vector<std::complex<double>>> points);

/// Convenience overload sampling a curve lying on V along a deterministic
/// radius/angle ladder; prefixes are nested, so estimates tighten
/// monotonically with the sample count.
PositionConstants position_constants(std::span<const int> subset, const Family& f,
                                     const RationalCurve& curve, int samples);

}  // namespace vdw
