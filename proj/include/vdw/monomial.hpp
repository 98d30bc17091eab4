#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace vdw {

/// Exponent vector of fixed length; the number of variables is the vector
/// length and the total degree is the sum of entries. Also used for
/// derivative multi-indices.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0u) {}
    Monomial(std::initializer_list<unsigned> exps) : e_(exps) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, unsigned exp = 1);

    std::size_t nvars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const;
    bool is_one() const { return degree() == 0; }

    /// Exponent-wise sum (monomial product / multi-index addition).
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o exponent-wise, or nullopt when o does not divide this.
    std::optional<Monomial> quotient_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<unsigned> e_;
};

/// Three-way graded-lex comparison: higher total degree wins; ties compare
/// exponents left to right (earlier variables more significant). Returns
/// -1, 0, +1 for a < b, a == b, a > b.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Comparator putting the graded-lex greatest monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) > 0;
    }
};

/// All monomials of the exact total degree, graded-lex greatest first
/// (x0^d, x0^{d-1}x1, ...).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// All monomials of total degree <= cap in the canonical enumeration order:
/// ascending degree, and within each degree the same tie order as above
/// (1, x0, x1, x0^2, x0*x1, x1^2, ...).
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned cap);

}  // namespace vdw
