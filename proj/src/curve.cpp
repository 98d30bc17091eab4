#include "vdw/curve.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <cmath>

namespace vdw {

RationalCurve::RationalCurve(std::vector<Poly> components) : components_(std::move(components)) {
    if (components_.size() < 2)
        throw ValidationError("rational curve needs at least two components");
    bool all_zero = true;
    degree_ = 0;
    for (const Poly& c : components_) {
        if (c.nvars() != 1) throw ValidationError("curve components must be univariate");
        if (!c.is_zero()) {
            all_zero = false;
            degree_ = std::max(degree_, c.degree());
        }
    }
    if (all_zero) throw ValidationError("curve components are all zero");

    Poly g(components_[0]);
    for (std::size_t i = 1; i < components_.size(); ++i) {
        if (g.is_zero() && components_[i].is_zero()) continue;
        g = gcd_univariate(g, components_[i]);
    }
    if (g.degree() > 0)
        throw ValidationError("curve components share the factor " + g.str() +
                              "; reduce the representation first");
}

std::vector<std::complex<double>> RationalCurve::eval(std::complex<double> z) const {
    std::vector<std::complex<double>> out;
    out.reserve(components_.size());
    const std::complex<double> pt[1] = {z};
    for (const Poly& c : components_) out.push_back(c.eval(std::span<const std::complex<double>>(pt)));
    return out;
}

double RationalCurve::norm_at(std::complex<double> z) const {
    double s = 0.0;
    for (const auto& v : eval(z)) s += std::norm(v);
    return std::sqrt(s);
}

RationalCurve reduce_representation(std::vector<Poly> components) {
    if (components.empty()) throw ValidationError("reduce_representation: empty tuple");
    bool all_zero = std::all_of(components.begin(), components.end(),
                                [](const Poly& p) { return p.is_zero(); });
    if (all_zero) throw ValidationError("reduce_representation: all components zero");

    Poly g(components[0]);
    for (std::size_t i = 1; i < components.size(); ++i) {
        if (g.is_zero() && components[i].is_zero()) continue;
        g = gcd_univariate(g, components[i]);
    }
    if (g.degree() > 0) {
        for (Poly& c : components) {
            if (c.is_zero()) continue;
            auto q = exact_divide(c, g);
            if (!q) throw Error("reduce_representation: gcd fails to divide a component");
            c = *q;
        }
    }
    return RationalCurve(std::move(components));
}

}  // namespace vdw
