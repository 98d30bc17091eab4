#include "vdw/nevanlinna.hpp"

#include "vdw/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace vdw {

double circle_average(const std::function<double(std::complex<double>)>& f, double r,
                      const QuadratureOptions& opts) {
    long n = opts.initial_points;
    auto sample_sum = [&](long count, double offset) {
        double s = 0.0;
        for (long j = 0; j < count; ++j) {
            const double theta = offset + 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(count);
            s += f(std::polar(r, theta));
        }
        return s;
    };

    double estimate = sample_sum(n, 0.0) / static_cast<double>(n);
    while (n < opts.max_points) {
        // Midpoints of the current grid: the doubled average reuses all
        // previous samples.
        const double shifted = sample_sum(n, M_PI / static_cast<double>(n)) / static_cast<double>(n);
        const double refined = 0.5 * (estimate + shifted);
        const double tol = opts.rel_tol * std::max(1.0, std::abs(refined));
        const bool converged = std::abs(refined - estimate) <= tol;
        estimate = refined;
        n *= 2;
        if (converged) return estimate;
    }
    throw ConvergenceError("circle_average: no convergence within " +
                           std::to_string(opts.max_points) + " points at r = " +
                           std::to_string(r));
}

namespace {

std::vector<std::complex<double>> complex_coeffs(const Poly& p) {
    const auto cs = dense_coeffs(p);
    std::vector<std::complex<double>> out(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) out[i] = std::complex<double>(to_double(cs[i]), 0.0);
    return out;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

void check_pole_guard(const Divisor& poles, double r) {
    for (const auto& root : poles.roots()) {
        if (std::abs(r - root.radius) < kRadiusGuard * r)
            throw ValidationError("radius " + std::to_string(r) +
                                  " falls inside the guard gap of a singular radius");
    }
}

}  // namespace

double characteristic(const RationalCurve& f, double r, const QuadratureOptions& opts) {
    if (r <= 1.0) throw ValidationError("characteristic: radius must exceed 1");
    std::vector<std::vector<std::complex<double>>> comps;
    comps.reserve(f.components().size());
    for (const Poly& c : f.components()) comps.push_back(complex_coeffs(c));
    auto log_norm = [&](std::complex<double> z) {
        double s = 0.0;
        for (const auto& c : comps) s += std::norm(horner(c, z));
        return 0.5 * std::log(s);
    };
    return circle_average(log_norm, r, opts) - circle_average(log_norm, 1.0, opts);
}

double proximity(const Poly& num, const Poly& den, double r, const QuadratureOptions& opts) {
    if (r <= 1.0) throw ValidationError("proximity: radius must exceed 1");
    if (den.is_zero()) throw ValidationError("proximity: zero denominator");
    if (num.is_zero()) return 0.0;
    check_pole_guard(zero_divisor(den), r);

    const auto cn = complex_coeffs(num);
    const auto cd = complex_coeffs(den);
    auto log_plus = [&](std::complex<double> z) {
        const double v = std::abs(horner(cn, z)) / std::abs(horner(cd, z));
        return v > 1.0 ? std::log(v) : 0.0;
    };
    return circle_average(log_plus, r, opts);
}

double jensen_check(const Poly& p, std::span<const double> r_grid, const QuadratureOptions& opts) {
    if (p.is_zero()) throw ValidationError("jensen_check: zero polynomial");
    const Divisor d = zero_divisor(p);
    const auto c = complex_coeffs(p);
    auto log_abs = [&](std::complex<double> z) { return std::log(std::abs(horner(c, z))); };

    check_pole_guard(d, 1.0);
    const double at_one = circle_average(log_abs, 1.0, opts);
    double worst = 0.0;
    for (double r : r_grid) {
        if (r <= 1.0) throw ValidationError("jensen_check: radii must exceed 1");
        check_pole_guard(d, r);
        const double quad = circle_average(log_abs, r, opts) - at_one;
        const double exact = counting(d, r);
        worst = std::max(worst, std::abs(exact - quad));
    }
    return worst;
}

std::vector<double> logderiv_trend(const Poly& p, const Monomial& alpha,
                                   std::span<const double> r_grid,
                                   const QuadratureOptions& opts) {
    if (p.is_constant()) throw ValidationError("logderiv_trend: nonconstant polynomial required");
    const Poly dp = p.derivative(alpha);
    std::vector<Poly> comps{Poly::constant(1, Rat(1)), p};
    const RationalCurve as_map(std::move(comps));

    std::vector<double> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) {
        const double m = dp.is_zero() ? 0.0 : proximity(dp, p, r, opts);
        const double t = characteristic(as_map, r, opts);
        out.push_back(t > 0 ? m / t : 0.0);
    }
    return out;
}

std::vector<double> RGrid::radii() const {
    if (points <= 0 || r_min <= 1.0 || r_max < r_min)
        throw ValidationError("RGrid: need points >= 1 and 1 < r_min <= r_max");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(r_min);
        return out;
    }
    for (int i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(points - 1);
        out.push_back(log_spacing ? r_min * std::pow(r_max / r_min, s)
                                  : r_min + s * (r_max - r_min));
    }
    return out;
}

void GrowthTable::add_series(const std::string& name, std::vector<double> values) {
    if (values.size() != radii_.size())
        throw ValidationError("GrowthTable: series length mismatch for " + name);
    names_.push_back(name);
    columns_.push_back(std::move(values));
}

const std::vector<double>& GrowthTable::series(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return columns_[i];
    throw ValidationError("GrowthTable: no series named " + name);
}

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void GrowthTable::write_csv(std::ostream& os) const {
    os << "r";
    for (const auto& n : names_) os << "," << n;
    os << "\n";
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        os << format_csv_value(radii_[i]);
        for (const auto& col : columns_) os << "," << format_csv_value(col[i]);
        os << "\n";
    }
}

}  // namespace vdw
