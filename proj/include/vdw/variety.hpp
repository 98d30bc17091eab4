#pragma once

#include "vdw/groebner.hpp"
#include "vdw/ratmat.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace vdw {

/// Coordinates of a degree-d quotient class in the cached standard-monomial
/// basis of that degree.
struct QuotClass {
    int degree = 0;
    RatVec coords;

    bool is_zero() const;
};

/// Projective subvariety of P^n given by homogeneous generators. The claimed
/// dimension is an input, cross-checked by validate_dimension(). Quotient
/// bases are cached per degree behind a lock: the first caller populates a
/// degree, concurrent readers are safe afterwards.
class Variety {
public:
    Variety(std::size_t ambient_n, int dim_k, std::vector<Poly> generators);

    static Variety projective_space(std::size_t n);

    std::size_t ambient_n() const { return ambient_n_; }
    int dim_k() const { return dim_k_; }
    const std::vector<Poly>& generators() const { return generators_; }
    const GroebnerBasis& groebner() const { return gb_; }

    /// Hilbert function H_V(d): the number of degree-d monomials outside the
    /// lead ideal. Requires d >= 1.
    int hilbert_function(int d) const;

    /// Degree-d standard monomials, graded-lex greatest first.
    const std::vector<Monomial>& standard_monomials(int d) const;

    /// Coordinates of the normal form of a homogeneous Q in the
    /// standard-monomial basis of its degree; zero exactly when Q lies in the
    /// ideal.
    QuotClass quot_class(const Poly& q) const;

    /// The Hilbert values at d = 1..k+2 must fit a polynomial of degree
    /// exactly dim_k: vanishing (k+1)-st finite difference with a positive
    /// k-th difference. Throws ValidationError otherwise.
    void validate_dimension() const;

private:
    std::size_t ambient_n_;
    int dim_k_;
    std::vector<Poly> generators_;
    GroebnerBasis gb_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::vector<Monomial>> standard_cache_;
};

enum class Emptiness { empty, nonempty, inconclusive };

struct EmptinessResult {
    Emptiness verdict = Emptiness::inconclusive;
    /// Exact projective point zeroing every generator; the first nonzero
    /// coordinate is 1.
    std::optional<RatVec> witness;
    /// For the empty verdict: the largest variable power that had to be
    /// certified inside the ideal.
    int certificate_degree = 0;
};

/// Decides whether homogeneous generators share a projective zero. "empty"
/// is certified by every variable having a power with normal form zero
/// (powers up to degree_cap); "nonempty" by an exhibited rational point found
/// by chart-wise bounded-height search. Neither certificate within the caps
/// yields "inconclusive".
EmptinessResult projective_empty(const std::vector<Poly>& gens, int degree_cap,
                                 int height_cap = 3);

}  // namespace vdw
