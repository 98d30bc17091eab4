#pragma once

#include "vdw/poly.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace vdw {

struct RootPoint {
    std::complex<double> location;
    int multiplicity = 1;
    double radius = 0.0;
};

/// Zero divisor of a univariate polynomial: the exact squarefree factor data
/// (monic factors, exact multiplicities) alongside numerically located roots.
/// Exact predicates use the factors; radius comparisons use the roots.
class Divisor {
public:
    Divisor() = default;
    Divisor(SquarefreeDecomposition decomposition, std::vector<RootPoint> roots);

    const SquarefreeDecomposition& decomposition() const { return decomposition_; }
    const std::vector<RootPoint>& roots() const { return roots_; }
    /// Sum of multiplicity * factor degree.
    int total_count() const;
    /// All multiplicities multiplied by e >= 1.
    Divisor scaled(int e) const;

private:
    SquarefreeDecomposition decomposition_;
    std::vector<RootPoint> roots_;
};

/// Extracts the zero divisor: exact multiplicities through squarefree
/// decomposition, then per-factor roots from companion-matrix eigenvalues
/// polished by Newton iteration. Rejects the zero polynomial; a nonzero
/// constant yields the empty divisor.
Divisor zero_divisor(const Poly& p);

inline constexpr int kNoTruncation = -1;

/// Truncated counting function
///   N^{[M]}(r) = sum_{|z_j| <= r} min(M, mult_j) * log(r / max(1, |z_j|))
/// in closed form. Requires r > 1 and r outside the guard gap of every root
/// radius. M = kNoTruncation disables the cap.
double counting(const Divisor& d, double r, int truncation = kNoTruncation);

/// Truncated pre-counting function n(t): multiplicity-weighted root count in
/// the closed disc of radius t.
double counting_density(const Divisor& d, double t, int truncation = kNoTruncation);

/// Relative guard width around root radii; radii closer than
/// guard * r to some root modulus are rejected as ambiguous.
inline constexpr double kRadiusGuard = 1e-9;

}  // namespace vdw
