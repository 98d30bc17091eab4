#pragma once

#include "vdw/poly.hpp"

#include <complex>
#include <vector>

namespace vdw {

/// Rational curve into P^n: a tuple of n+1 univariate components with no
/// common factor (a reduced representation). Use reduce_representation to
/// build one from an arbitrary nonzero tuple.
class RationalCurve {
public:
    /// Requires a coprime tuple; throws ValidationError otherwise.
    explicit RationalCurve(std::vector<Poly> components);

    const std::vector<Poly>& components() const { return components_; }
    std::size_t ambient_n() const { return components_.size() - 1; }
    /// Largest component degree.
    int degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    std::vector<std::complex<double>> eval(std::complex<double> z) const;
    /// Euclidean norm of the component values at z.
    double norm_at(std::complex<double> z) const;

private:
    std::vector<Poly> components_;
    int degree_;
};

/// Divides out the exact gcd of the components; the result is coprime.
/// Rejects the all-zero tuple.
RationalCurve reduce_representation(std::vector<Poly> components);

}  // namespace vdw
