#pragma once

#include "vdw/monomial.hpp"
#include "vdw/rat.hpp"

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vdw {

/// Multivariate polynomial over the rationals, stored sparsely with terms in
/// graded-lex order (leading term first). Values are immutable after
/// construction in the sense that every operation returns a fresh canonical
/// polynomial: no zero coefficients are ever stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    /// The zero polynomial in `nvars` variables.
    explicit Poly(std::size_t nvars = 1) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rat& c);
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly from_term(const Monomial& m, const Rat& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    Rat constant_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    friend Poly operator*(const Rat& c, const Poly& p) { return p * c; }
    Poly pow(unsigned e) const;
    bool operator==(const Poly&) const = default;

    Poly derivative(std::size_t var) const;
    /// Iterated partial derivative along the multi-index alpha;
    /// derivative(0) is the identity.
    Poly derivative(const Monomial& alpha) const;

    /// Composition this(args[0], ..., args[nvars-1]); the args must agree on
    /// their own variable count.
    Poly substitute(std::span<const Poly> args) const;

    Rat eval(std::span<const Rat> point) const;
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    /// Canonical printing: terms leading-first, ties broken by variable
    /// index. parse_poly(str(names), names) reproduces the polynomial.
    std::string str(std::span<const std::string> names) const;
    std::string str() const;

    /// Adds c * m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Rat& c);

private:
    std::size_t nvars_;
    TermMap terms_;
};

// ---- univariate helpers ----------------------------------------------------

/// Dense coefficients c[0..deg] of a univariate polynomial (c[i] multiplies
/// z^i); {0} for the zero polynomial.
std::vector<Rat> dense_coeffs(const Poly& p);
Poly from_dense_coeffs(std::span<const Rat> coeffs);

Poly monic(const Poly& p);

/// Quotient and remainder of univariate division, deg(rem) < deg(b).
std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b);

/// Monic greatest common divisor by the Euclidean algorithm; rejects the
/// (0, 0) input.
Poly gcd_univariate(const Poly& a, const Poly& b);

struct SquarefreeFactor {
    Poly factor;
    int multiplicity;
};

/// p = lead * prod factor_i^multiplicity_i with monic pairwise-coprime
/// squarefree factors and strictly increasing multiplicities.
struct SquarefreeDecomposition {
    Rat lead;
    std::vector<SquarefreeFactor> factors;
    std::size_t nvars = 1;

    Poly reassemble() const;
};

/// Yun's algorithm over the rationals; rejects the zero polynomial.
SquarefreeDecomposition squarefree_decompose(const Poly& p);

/// Exact quotient a / b, or nullopt when b does not divide a (multivariate,
/// single divisor; b nonzero).
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Largest e with phi^e dividing p (p nonzero, phi nonconstant).
int valuation(const Poly& p, const Poly& phi);

/// Determinant over the polynomial ring, computed fraction-free (Bareiss)
/// with row pivoting; the matrix must be square and nonempty.
Poly det_poly_matrix(const std::vector<std::vector<Poly>>& m);

/// Default display names: z for one variable, x0..x{n-1} otherwise.
std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace vdw
