#pragma once

#include "vdw/curve.hpp"
#include "vdw/divisor.hpp"
#include "vdw/poly.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vdw {

struct QuadratureOptions {
    double rel_tol = 1e-9;
    int initial_points = 64;
    long max_points = 1 << 21;
};

/// (1/2pi) integral of f(r e^{i theta}) d theta by the doubling trapezoid
/// rule on the periodic interval; throws ConvergenceError past the budget.
double circle_average(const std::function<double(std::complex<double>)>& f, double r,
                      const QuadratureOptions& opts = {});

/// Characteristic function T_f(r): circle average of log ||f|| at radius r
/// minus the same average at radius 1. Requires r > 1; the reduced
/// representation keeps the integrand smooth.
double characteristic(const RationalCurve& f, double r, const QuadratureOptions& opts = {});

/// Proximity function m(r, phi) for phi = num/den: circle average of
/// log^+ |phi|. Radii in the guard gap of a pole radius are rejected.
double proximity(const Poly& num, const Poly& den, double r, const QuadratureOptions& opts = {});

/// Max over the grid of | N_p(r) - [circle avg of log|p| at r minus at 1] |,
/// the closed-form counting function against the quadrature route.
double jensen_check(const Poly& p, std::span<const double> r_grid,
                    const QuadratureOptions& opts = {});

/// Ratio series m(r, D^alpha p / p) / T(r, (1 : p)) over the grid.
std::vector<double> logderiv_trend(const Poly& p, const Monomial& alpha,
                                   std::span<const double> r_grid,
                                   const QuadratureOptions& opts = {});

/// Radius grid description; radii() materializes it (log or linear spacing).
struct RGrid {
    double r_min = 2.0;
    double r_max = 100.0;
    int points = 20;
    bool log_spacing = true;

    std::vector<double> radii() const;
};

/// Named value series over a radius grid, exportable as CSV with 12
/// significant digits (first column r, one row per radius).
class GrowthTable {
public:
    explicit GrowthTable(std::vector<double> radii) : radii_(std::move(radii)) {}

    void add_series(const std::string& name, std::vector<double> values);
    const std::vector<double>& radii() const { return radii_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<double>& series(const std::string& name) const;

    void write_csv(std::ostream& os) const;

private:
    std::vector<double> radii_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

/// Formats with 12 significant digits; the CSV writers share it so artifacts
/// are byte-stable.
std::string format_csv_value(double v);

}  // namespace vdw
