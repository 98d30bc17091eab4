#include "vdw/poly.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <sstream>

namespace vdw {

Poly Poly::constant(std::size_t nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error("Poly::variable: index out of range");
    Poly p(nvars);
    p.add_term(Monomial::unit(nvars, index), Rat(1));
    return p;
}

Poly Poly::from_term(const Monomial& m, const Rat& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

Rat Poly::constant_term() const { return coeff(Monomial(nvars_)); }

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (m.nvars() != nvars_) throw Error("add_term: variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (o.nvars_ != nvars_) throw Error("poly add: variable count mismatch");
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (o.nvars_ != nvars_) throw Error("poly sub: variable count mismatch");
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (o.nvars_ != nvars_) throw Error("poly mul: variable count mismatch");
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(nvars_, Rat(1));
    Poly base(*this);
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e != 0) base = base * base;
    }
    return acc;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw Error("derivative: variable index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        const unsigned e = m[var];
        if (e == 0) continue;
        std::vector<unsigned> exps = m.exponents();
        exps[var] = e - 1;
        r.add_term(Monomial(std::move(exps)), c * Rat(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::derivative(const Monomial& alpha) const {
    if (alpha.nvars() != nvars_) throw Error("derivative: multi-index length mismatch");
    Poly r(*this);
    for (std::size_t v = 0; v < nvars_; ++v)
        for (unsigned j = 0; j < alpha[v]; ++j) r = r.derivative(v);
    return r;
}

Poly Poly::substitute(std::span<const Poly> args) const {
    if (args.size() != nvars_)
        throw Error("substitute: expected " + std::to_string(nvars_) + " arguments, got " +
                    std::to_string(args.size()));
    const std::size_t target_vars = args.empty() ? 1 : args[0].nvars();
    for (const Poly& a : args)
        if (a.nvars() != target_vars) throw Error("substitute: argument variable counts differ");

    Poly result(target_vars);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(target_vars, c);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (m[v] > 0) term = term * args[v].pow(m[v]);
        }
        result = result + term;
    }
    return result;
}

Rat Poly::eval(std::span<const Rat> point) const {
    if (point.size() != nvars_) throw Error("eval: point dimension mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t v = 0; v < nvars_; ++v)
            for (unsigned j = 0; j < m[v]; ++j) t *= point[v];
        acc += t;
    }
    return acc;
}

std::complex<double> Poly::eval(std::span<const std::complex<double>> point) const {
    if (point.size() != nvars_) throw Error("eval: point dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(to_double(c), 0.0);
        for (std::size_t v = 0; v < nvars_; ++v)
            for (unsigned j = 0; j < m[v]; ++j) t *= point[v];
        acc += t;
    }
    return acc;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
    if (nvars == 1) return {"z"};
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string Poly::str(std::span<const std::string> names) const {
    if (names.size() != nvars_) throw Error("str: name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::string vars;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (m[v] > 1) vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty()) {
            os << to_string(mag);
        } else if (mag == 1) {
            os << vars;
        } else {
            os << to_string(mag) << "*" << vars;
        }
    }
    return os.str();
}

std::string Poly::str() const {
    const auto names = default_var_names(nvars_);
    return str(names);
}

// ---- univariate helpers ----------------------------------------------------

namespace {

void require_univariate(const Poly& p, const char* who) {
    if (p.nvars() != 1) throw Error(std::string(who) + ": univariate polynomial required");
}

}  // namespace

std::vector<Rat> dense_coeffs(const Poly& p) {
    require_univariate(p, "dense_coeffs");
    std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Rat(0));
    for (const auto& [m, k] : p.terms()) c[m[0]] = k;
    return c;
}

Poly from_dense_coeffs(std::span<const Rat> coeffs) {
    Poly p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(Monomial{static_cast<unsigned>(i)}, coeffs[i]);
    return p;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * Rat(1 / p.leading_coeff());
}

std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b) {
    require_univariate(a, "divmod");
    require_univariate(b, "divmod");
    if (b.is_zero()) throw Error("divmod: division by zero polynomial");
    Poly q(1), r(a);
    const int db = b.degree();
    const Rat& lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        const unsigned shift = static_cast<unsigned>(r.degree() - db);
        const Rat factor = r.leading_coeff() / lb;
        Poly t = Poly::from_term(Monomial{shift}, factor);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

Poly gcd_univariate(const Poly& a, const Poly& b) {
    require_univariate(a, "gcd");
    require_univariate(b, "gcd");
    if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
    Poly u(a), v(b);
    while (!v.is_zero()) {
        auto [q, r] = divmod_univariate(u, v);
        u = v;
        v = r;
    }
    return monic(u);
}

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
    require_univariate(p, "squarefree_decompose");
    if (p.is_zero()) throw Error("squarefree_decompose: zero polynomial");

    SquarefreeDecomposition out;
    out.lead = p.leading_coeff();
    out.nvars = p.nvars();
    if (p.degree() == 0) return out;

    // Yun's algorithm, characteristic zero.
    const Poly pm = monic(p);
    const Poly dp = pm.derivative(0);
    Poly a = gcd_univariate(pm, dp);
    Poly b = divmod_univariate(pm, a).first;
    Poly c = divmod_univariate(dp, a).first - b.derivative(0);
    int i = 1;
    while (b.degree() > 0) {
        Poly ai = gcd_univariate(b, c);
        if (ai.degree() > 0) out.factors.push_back({ai, i});
        b = divmod_univariate(b, ai).first;
        c = divmod_univariate(c, ai).first - b.derivative(0);
        ++i;
    }
    return out;
}

Poly SquarefreeDecomposition::reassemble() const {
    Poly p = Poly::constant(nvars, lead);
    for (const auto& f : factors) p = p * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    return p;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("exact_divide: division by zero polynomial");
    if (a.nvars() != b.nvars()) throw Error("exact_divide: variable count mismatch");
    Poly q(a.nvars()), r(a);
    const Monomial& lmb = b.leading_monomial();
    const Rat& lcb = b.leading_coeff();
    while (!r.is_zero()) {
        auto quo = r.leading_monomial().quotient_by(lmb);
        if (!quo) return std::nullopt;
        Poly t = Poly::from_term(*quo, r.leading_coeff() / lcb);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

int valuation(const Poly& p, const Poly& phi) {
    if (p.is_zero()) throw Error("valuation of zero polynomial");
    if (phi.is_constant()) throw Error("valuation by constant");
    int e = 0;
    Poly rest(p);
    while (true) {
        auto q = exact_divide(rest, phi);
        if (!q) return e;
        rest = *q;
        ++e;
    }
}

Poly det_poly_matrix(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("det: matrix is not square");
    const std::size_t nvars = m[0][0].nvars();

    std::vector<std::vector<Poly>> a(m);
    Poly prev = Poly::constant(nvars, Rat(1));
    int swaps = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Poly(nvars);
            std::swap(a[k], a[pivot]);
            ++swaps;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw Error("det: fraction-free division failed");
                a[i][j] = *q;
            }
            a[i][k] = Poly(nvars);
        }
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    return (swaps % 2 == 0) ? det : -det;
}

}  // namespace vdw
