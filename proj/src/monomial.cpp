#include "vdw/monomial.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <numeric>

namespace vdw {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned exp) {
    Monomial m(nvars);
    m.e_.at(var) = exp;
    return m;
}

unsigned Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.nvars() != nvars()) throw Error("monomial product: variable count mismatch");
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (o.nvars() != nvars()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

std::optional<Monomial> Monomial::quotient_by(const Monomial& o) const {
    if (!o.divides(*this)) return std::nullopt;
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw Error("monomial lcm: variable count mismatch");
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.nvars() && i < b.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

void enumerate_degree(std::size_t nvars, unsigned degree, std::size_t slot,
                      std::vector<unsigned>& current, std::vector<Monomial>& out) {
    if (slot + 1 == nvars) {
        current[slot] = degree;
        out.emplace_back(current);
        return;
    }
    // Descending first exponent yields graded-lex greatest first.
    for (unsigned e = degree;; --e) {
        current[slot] = e;
        enumerate_degree(nvars, degree - e, slot + 1, current, out);
        if (e == 0) break;
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    if (nvars == 0) throw Error("monomials_of_degree: need at least one variable");
    std::vector<Monomial> out;
    std::vector<unsigned> current(nvars, 0u);
    enumerate_degree(nvars, degree, 0, current, out);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned cap) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= cap; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace vdw
