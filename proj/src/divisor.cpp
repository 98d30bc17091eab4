#include "vdw/divisor.hpp"

#include "vdw/error.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace vdw {

namespace {

std::vector<std::complex<double>> factor_roots(const Poly& factor) {
    const auto coeffs = dense_coeffs(factor);
    const int deg = factor.degree();
    std::vector<std::complex<double>> roots;
    if (deg <= 0) return roots;

    std::vector<double> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = to_double(coeffs[i]);
    const double lead = c.back();

    if (deg == 1) {
        roots.emplace_back(-c[0] / lead, 0.0);
        return roots;
    }
    if (deg == 2) {
        const std::complex<double> a(c[2]), b(c[1]), k(c[0]);
        const std::complex<double> disc = std::sqrt(b * b - 4.0 * a * k);
        // The larger-magnitude branch first avoids cancellation.
        const std::complex<double> qq = (std::real(std::conj(b) * disc) >= 0) ? -0.5 * (b + disc)
                                                                              : -0.5 * (b - disc);
        if (std::abs(qq) > 0) {
            roots.push_back(qq / a);
            roots.push_back(k / qq);
        } else {
            roots.emplace_back(0.0, 0.0);
            roots.emplace_back(0.0, 0.0);
        }
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)] / lead;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
        for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    }

    // Newton polish on the squarefree factor (simple roots).
    double scale = 0.0;
    for (double v : c) scale += std::abs(v);
    for (auto& z : roots) {
        for (int iter = 0; iter < 60; ++iter) {
            std::complex<double> f(0.0), df(0.0);
            for (int i = deg; i >= 0; --i) {
                df = df * z + f;
                f = f * z + c[static_cast<std::size_t>(i)];
            }
            const double local_scale =
                scale * std::pow(std::max(1.0, std::abs(z)), deg) * 1e-14;
            if (std::abs(f) <= local_scale || std::abs(df) == 0.0) break;
            z -= f / df;
        }
    }
    return roots;
}

}  // namespace

Divisor::Divisor(SquarefreeDecomposition decomposition, std::vector<RootPoint> roots)
    : decomposition_(std::move(decomposition)), roots_(std::move(roots)) {}

int Divisor::total_count() const {
    int n = 0;
    for (const auto& f : decomposition_.factors) n += f.multiplicity * f.factor.degree();
    return n;
}

Divisor Divisor::scaled(int e) const {
    if (e < 1) throw ValidationError("Divisor::scaled: factor must be positive");
    Divisor d(*this);
    for (auto& f : d.decomposition_.factors) f.multiplicity *= e;
    for (auto& r : d.roots_) r.multiplicity *= e;
    return d;
}

Divisor zero_divisor(const Poly& p) {
    if (p.nvars() != 1) throw ValidationError("zero_divisor: univariate polynomial required");
    if (p.is_zero()) throw ValidationError("zero_divisor: zero polynomial");

    SquarefreeDecomposition dec = squarefree_decompose(p);
    std::vector<RootPoint> roots;
    for (const auto& f : dec.factors) {
        for (const auto& z : factor_roots(f.factor)) {
            roots.push_back({z, f.multiplicity, std::abs(z)});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RootPoint& a, const RootPoint& b) {
        if (a.radius != b.radius) return a.radius < b.radius;
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return Divisor(std::move(dec), std::move(roots));
}

namespace {

void check_guard(const Divisor& d, double r) {
    for (const auto& root : d.roots()) {
        if (std::abs(r - root.radius) < kRadiusGuard * r)
            throw ValidationError("counting radius " + std::to_string(r) +
                                  " falls inside the guard gap of a root radius");
    }
}

double truncated(int multiplicity, int truncation) {
    return truncation == kNoTruncation ? multiplicity : std::min(multiplicity, truncation);
}

}  // namespace

double counting(const Divisor& d, double r, int truncation) {
    if (r <= 1.0) throw ValidationError("counting: radius must exceed 1");
    if (truncation != kNoTruncation && truncation < 1)
        throw ValidationError("counting: truncation level must be positive");
    check_guard(d, r);
    double acc = 0.0;
    for (const auto& root : d.roots()) {
        if (root.radius > r) continue;
        acc += truncated(root.multiplicity, truncation) * std::log(r / std::max(1.0, root.radius));
    }
    return acc;
}

double counting_density(const Divisor& d, double t, int truncation) {
    double acc = 0.0;
    for (const auto& root : d.roots())
        if (root.radius <= t) acc += truncated(root.multiplicity, truncation);
    return acc;
}

}  // namespace vdw
