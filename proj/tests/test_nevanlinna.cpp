#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vdw/curve.hpp"
#include "vdw/divisor.hpp"
#include "vdw/error.hpp"
#include "vdw/nevanlinna.hpp"
#include "vdw/parser.hpp"

#include <cmath>
#include <sstream>

using namespace vdw;

namespace {
const std::vector<std::string> zs{"z"};

Poly P(const std::string& text) { return parse_poly(text, zs); }

// Random polynomial whose root radii stay clear of 1 and of the grid radii,
// so every quadrature is guard-safe.
Poly random_guarded_poly(Rng& rng, const std::vector<double>& radii) {
    while (true) {
        const Poly p = oracle::random_nonzero_poly(rng, 1, 6, 5);
        if (p.degree() < 1) continue;
        bool good = true;
        for (const auto& root : zero_divisor(p).roots()) {
            if (std::abs(root.radius - 1.0) < 2e-2) good = false;
            for (double r : radii)
                if (std::abs(root.radius - r) < 2e-2 * r) good = false;
        }
        if (good) return p;
    }
}
}  // namespace

TEST_CASE("reduce_representation: documented examples") {
    const auto c1 = reduce_representation({P("z"), P("z^2")});
    CHECK(c1.components()[0] == P("1"));
    CHECK(c1.components()[1] == P("z"));

    const auto c2 = reduce_representation({P("1"), P("z")});
    CHECK(c2.components()[0] == P("1"));
    CHECK(c2.components()[1] == P("z"));

    const auto c3 = reduce_representation({P("z^2-1"), P("z-1")});
    CHECK(c3.components()[0] == P("z+1"));
    CHECK(c3.components()[1] == P("1"));

    CHECK_THROWS_AS(reduce_representation({Poly(1), Poly(1)}), ValidationError);
    CHECK_THROWS_AS(RationalCurve({P("z"), P("z^2")}), ValidationError);
}

TEST_CASE("zero_divisor: exact multiplicities and located roots") {
    const auto d1 = zero_divisor(P("z^3*(z-1)"));
    REQUIRE(d1.roots().size() == 2);
    CHECK(d1.roots()[0].multiplicity == 3);
    CHECK(std::abs(d1.roots()[0].location) < 1e-12);
    CHECK(d1.roots()[1].multiplicity == 1);
    CHECK(std::abs(d1.roots()[1].location - 1.0) < 1e-10);

    const auto d2 = zero_divisor(P("z^2+1"));
    REQUIRE(d2.roots().size() == 2);
    for (const auto& r : d2.roots()) {
        CHECK(r.multiplicity == 1);
        CHECK(r.radius == doctest::Approx(1.0));
        CHECK(std::abs(r.location.real()) < 1e-12);
    }

    CHECK_THROWS_AS(zero_divisor(Poly(1)), ValidationError);
    CHECK(zero_divisor(P("7")).roots().empty());
}

TEST_CASE("zero_divisor: Wilkinson-lite with factor cross-check") {
    const Poly p = P("(z-1)*(z-2)*(z-3)*(z-4)*(z-5)*(z-6)");
    const auto d = zero_divisor(p);
    REQUIRE(d.roots().size() == 6);
    for (int j = 1; j <= 6; ++j) {
        const auto& root = d.roots()[static_cast<std::size_t>(j - 1)];
        CHECK(root.multiplicity == 1);
        CHECK(std::abs(root.location - std::complex<double>(j, 0.0)) < 1e-8);
    }
    CHECK(d.decomposition().reassemble() == p);
}

TEST_CASE("counting: closed-form examples") {
    const auto origin = zero_divisor(P("z"));
    for (double r : {2.0, 5.0, 40.0}) CHECK(counting(origin, r) == doctest::Approx(std::log(r)));

    const auto triple = zero_divisor(P("z^3"));
    CHECK(counting(triple, 7.0, 2) == doctest::Approx(2.0 * std::log(7.0)));
    CHECK(counting(triple, 7.0) == doctest::Approx(3.0 * std::log(7.0)));

    const double r = std::exp(2.0);
    const auto pm2 = zero_divisor(P("z^2-4"));
    CHECK(counting(pm2, r) == doctest::Approx(2.0 * (2.0 - std::log(2.0))).epsilon(1e-10));

    CHECK_THROWS_AS(counting(origin, 0.5), ValidationError);
    CHECK_THROWS_AS(counting(pm2, 2.0), ValidationError);  // guard gap at a root radius
}

TEST_CASE("counting: truncation and monotonicity properties") {
    Rng rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        Poly p = oracle::random_nonzero_poly(rng, 1, 3, 4);
        p = p * oracle::random_nonzero_poly(rng, 1, 2, 4).pow(2);
        if (p.degree() < 1) continue;
        const auto d = zero_divisor(p);
        double prev = 0.0;
        for (double r : {1.7, 3.3, 9.1, 27.9}) {
            bool guarded = false;
            for (const auto& root : d.roots())
                if (std::abs(r - root.radius) < 1e-6) guarded = true;
            if (guarded) continue;
            const double full = counting(d, r);
            const double t2 = counting(d, r, 2);
            const double t1 = counting(d, r, 1);
            CHECK(t2 <= full + 1e-12);
            CHECK(t2 <= 2.0 * t1 + 1e-12);
            CHECK(t1 <= t2 + 1e-12);
            CHECK(full >= prev - 1e-12);
            prev = full;
        }
    }
}

TEST_CASE("divisor scaling multiplies multiplicities") {
    const auto d = zero_divisor(P("z^2-4"));
    const auto d3 = d.scaled(3);
    CHECK(d3.total_count() == 6);
    CHECK(counting(d3, 10.0) == doctest::Approx(3.0 * counting(d, 10.0)));
    CHECK(counting(d3, 10.0, 2) == doctest::Approx(2.0 * counting(d, 10.0, 1)));
}

TEST_CASE("characteristic: closed form for the identity curve") {
    const RationalCurve f({P("1"), P("z")});
    for (double r : RGrid{2.0, 100.0, 20, true}.radii()) {
        const double expected = std::log(std::sqrt(1.0 + r * r)) - std::log(std::sqrt(2.0));
        CHECK(characteristic(f, r) == doctest::Approx(expected).epsilon(1e-8));
    }
    // T_f(r) - log r settles at the closed-form limit -log sqrt(2).
    CHECK(std::abs(characteristic(f, 1e4) - std::log(1e4) + std::log(std::sqrt(2.0))) < 1e-3);

    const RationalCurve constant({P("2"), P("3")});
    CHECK(characteristic(constant, 10.0) == doctest::Approx(0.0));
}

TEST_CASE("characteristic grows like degree times log r") {
    const RationalCurve f({P("1"), P("z"), P("z^2")});
    double bound = 0.0;
    for (double r : RGrid{2.0, 200.0, 12, true}.radii()) {
        const double dev = std::abs(characteristic(f, r) - 2.0 * std::log(r));
        bound = std::max(bound, dev);
    }
    CHECK(bound < 1.0);  // uniformly bounded deviation
}

TEST_CASE("proximity: documented examples") {
    CHECK(proximity(P("z"), P("1"), std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(proximity(P("1"), P("z"), std::exp(1.0)) == doctest::Approx(0.0));
    CHECK(proximity(P("1"), P("z"), 7.7) == doctest::Approx(0.0));
}

TEST_CASE("proximity plus counting reconstructs a characteristic") {
    // phi = z^2 / (z - 3): m + N_{1/phi} minus the max-norm characteristic of
    // (den : num) is constant in r; the euclidean characteristic differs from
    // the max-norm one by at most log sqrt(2).
    const Poly num = P("z^2"), den = P("z-3");
    const auto poles = zero_divisor(den);
    const auto cn = dense_coeffs(num);
    const auto cd = dense_coeffs(den);
    auto log_max = [&](std::complex<double> z) {
        std::complex<double> vn(0.0), vd(0.0);
        for (std::size_t i = cn.size(); i-- > 0;) vn = vn * z + to_double(cn[i]);
        for (std::size_t i = cd.size(); i-- > 0;) vd = vd * z + to_double(cd[i]);
        return std::log(std::max(std::abs(vn), std::abs(vd)));
    };
    const double base = circle_average(log_max, 1.0);
    const RationalCurve curve({P("z-3"), P("z^2")});

    std::vector<double> diffs;
    for (double r : {2.0, 5.0, 11.0, 31.0, 90.0}) {
        const double s = proximity(num, den, r) + counting(poles, r);
        const double t_max = circle_average(log_max, r) - base;
        diffs.push_back(s - t_max);
        const double t_euclid = characteristic(curve, r);
        CHECK(std::abs(t_max - t_euclid) <= 0.5 * std::log(2.0) + 1e-6);
    }
    for (double d : diffs) CHECK(d == doctest::Approx(diffs.front()).epsilon(1e-6));
}

TEST_CASE("jensen residual vanishes analytically for z") {
    const std::vector<double> grid{2.0, 4.0, 8.0};
    CHECK(jensen_check(P("z"), grid) < 1e-10);
}

TEST_CASE("jensen rejects radii inside a root's guard gap") {
    const std::vector<double> grid{5.0};
    CHECK_THROWS_AS(jensen_check(P("z - 5"), grid), ValidationError);
}

TEST_CASE("jensen residual: roots outside the unit disk, with multiplicity") {
    const std::vector<double> grid = RGrid{2.2, 90.0, 10, true}.radii();
    CHECK(jensen_check(P("z-5"), grid) < 1e-6);
    CHECK(jensen_check(P("(z-2)^3"), grid) < 1e-6);
}

TEST_CASE("jensen residual on seeded random polynomials") {
    const std::vector<double> grid = RGrid{2.0, 100.0, 20, true}.radii();
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly p = random_guarded_poly(rng, grid);
        CHECK(jensen_check(p, grid) <= 1e-6);
    }
}

TEST_CASE("first-main-theorem style bound for pullbacks") {
    // N_{Q(f)}(r) - d_Q T_f(r) stays bounded above on the grid; the bound is
    // visible at the endpoints (the sequence approaches its O(1) limit
    // monotonically once every root is inside the smallest radius).
    const RationalCurve f({P("1"), P("z"), P("z^2")});
    const std::vector<std::string> xyz{"x0", "x1", "x2"};
    const Poly q = parse_poly("x0*x1 + x2^2 - 3*x0^2", xyz);
    const Poly pulled = q.substitute(f.components());
    const auto d = zero_divisor(pulled);
    const auto radii = RGrid{2.6, 120.0, 14, true}.radii();
    auto dev = [&](double r) { return counting(d, r) - 2.0 * characteristic(f, r); };
    const double bound = std::max(dev(radii.front()), dev(radii.back()));
    for (double r : radii) CHECK(dev(r) <= bound + 1e-4);
}

TEST_CASE("logderiv trend: documented examples") {
    const std::vector<double> grid{10.0, 20.0, 40.0, 80.0};
    const auto zero_ratio = logderiv_trend(P("z"), Monomial{1}, grid);
    for (double v : zero_ratio) CHECK(v == doctest::Approx(0.0));

    const auto series = logderiv_trend(P("z^2-1"), Monomial{1}, grid);
    for (std::size_t i = 0; i < series.size(); ++i) {
        CHECK(series[i] < 0.5);
        if (i > 0) CHECK(series[i] <= series[i - 1] + 1e-9);
    }
    CHECK_THROWS_AS(logderiv_trend(P("5"), Monomial{1}, grid), ValidationError);
}

TEST_CASE("quadrature raises once the point budget is exhausted") {
    // A pole just outside the circle (distance 1e-5, past the guard gap)
    // makes a log spike far narrower than the affordable step width.
    QuadratureOptions tiny;
    tiny.max_points = 4096;
    CHECK_THROWS_AS(proximity(P("1"), P("z - 10 - 1/100000"), 10.0, tiny), ConvergenceError);
}

TEST_CASE("growth table CSV round trip and determinism") {
    RGrid grid{2.0, 16.0, 4, true};
    GrowthTable table(grid.radii());
    table.add_series("T_f", {1.0, 2.0, 3.0, 4.0});
    table.add_series("margin", {0.5, 0.25, 0.125, 1.0 / 3.0});
    std::ostringstream a, b;
    table.write_csv(a);
    table.write_csv(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, a.str().find('\n')) == "r,T_f,margin");
    CHECK(a.str().find("0.333333333333") != std::string::npos);
}
