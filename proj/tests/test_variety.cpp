#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vdw/error.hpp"
#include "vdw/parser.hpp"
#include "vdw/ratmat.hpp"
#include "vdw/variety.hpp"

using namespace vdw;

namespace {
const std::vector<std::string> xyz{"x0", "x1", "x2"};
const std::vector<std::string> zs{"z"};
const std::vector<std::string> wxyz{"x0", "x1", "x2", "x3"};

Poly P(const std::string& text, const std::vector<std::string>& names) {
    return parse_poly(text, names);
}

Variety conic() { return Variety(2, 1, {P("x0*x2-x1^2", xyz)}); }

Variety twisted_cubic() {
    return Variety(3, 1, {P("x0*x2-x1^2", wxyz), P("x1*x3-x2^2", wxyz), P("x0*x3-x1*x2", wxyz)});
}

long binomial(long n, long k) {
    long b = 1;
    for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Evaluation-rank oracle: substitute a curve parametrization of the variety
// into every degree-d monomial and count the independent results.
int parametrization_rank(const std::vector<Poly>& param, std::size_t ambient_vars, int d) {
    const auto monos = monomials_of_degree(ambient_vars, static_cast<unsigned>(d));
    std::vector<RatVec> rows;
    int max_deg = 0;
    std::vector<Poly> images;
    for (const Monomial& m : monos) {
        Poly img = Poly::from_term(m, Rat(1)).substitute(param);
        max_deg = std::max(max_deg, img.degree());
        images.push_back(std::move(img));
    }
    for (const Poly& img : images) {
        RatVec row(static_cast<std::size_t>(max_deg) + 1, Rat(0));
        for (const auto& [mono, c] : img.terms()) row[mono[0]] = c;
        rows.push_back(std::move(row));
    }
    return static_cast<int>(rank_of_rows(rows));
}
}  // namespace

TEST_CASE("hilbert function of projective space") {
    const Variety p2 = Variety::projective_space(2);
    CHECK(p2.hilbert_function(2) == 6);
    for (int d = 1; d <= 5; ++d) CHECK(p2.hilbert_function(d) == binomial(d + 2, 2));
    CHECK_THROWS_AS(p2.hilbert_function(0), Error);
    p2.validate_dimension();
}

TEST_CASE("hilbert function of the conic matches the evaluation-rank oracle") {
    const Variety v = conic();
    // Parametrization (1, z, z^2) of the conic x0*x2 = x1^2.
    const std::vector<Poly> param{parse_poly("1", zs), parse_poly("z", zs),
                                  parse_poly("z^2", zs)};
    CHECK(v.hilbert_function(2) == 5);
    for (int d = 1; d <= 4; ++d) {
        CHECK(v.hilbert_function(d) == 2 * d + 1);
        CHECK(v.hilbert_function(d) == parametrization_rank(param, 3, d));
    }
    v.validate_dimension();
}

TEST_CASE("hilbert function of the twisted cubic matches the evaluation-rank oracle") {
    const Variety v = twisted_cubic();
    const std::vector<Poly> param{parse_poly("1", zs), parse_poly("z", zs),
                                  parse_poly("z^2", zs), parse_poly("z^3", zs)};
    CHECK(v.hilbert_function(2) == 7);
    for (int d = 1; d <= 4; ++d) {
        CHECK(v.hilbert_function(d) == 3 * d + 1);
        CHECK(v.hilbert_function(d) == parametrization_rank(param, 4, d));
    }
    v.validate_dimension();
}

TEST_CASE("hilbert function is monotone and bounded by the full space") {
    for (const Variety& v : {conic(), twisted_cubic()}) {
        int prev = 0;
        const long n = static_cast<long>(v.ambient_n());
        for (int d = 1; d <= 5; ++d) {
            const int h = v.hilbert_function(d);
            CHECK(h >= prev);
            CHECK(h <= binomial(n + d, n));
            prev = h;
        }
    }
}

TEST_CASE("declared dimension is validated by Hilbert growth") {
    CHECK_THROWS_AS(Variety(2, 2, {P("x0*x2-x1^2", xyz)}).validate_dimension(), ValidationError);
    CHECK_THROWS_AS(Variety(3, 2, twisted_cubic().generators()).validate_dimension(),
                    ValidationError);
}

TEST_CASE("quot_class: defining equation has the zero class") {
    const Variety v = conic();
    CHECK(v.quot_class(P("x0*x2-x1^2", xyz)).is_zero());

    const Variety p2 = Variety::projective_space(2);
    const QuotClass cls = p2.quot_class(P("x0^2", xyz));
    CHECK(!cls.is_zero());
    const auto& basis = p2.standard_monomials(2);
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(cls.coords[i] == ((basis[i] == Monomial{2, 0, 0}) ? 1 : 0));

    CHECK_THROWS_AS(v.quot_class(P("x0^2+x1", xyz)), ValidationError);
}

TEST_CASE("quot_class is linear") {
    const Variety v = conic();
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Poly q1(3), q2(3);
        for (const Monomial& m : monomials_of_degree(3, 3)) {
            q1.add_term(m, Rat(static_cast<long>(rng.int_in(-3, 3))));
            q2.add_term(m, Rat(static_cast<long>(rng.int_in(-3, 3))));
        }
        if (q1.is_zero() || q2.is_zero() || (q1 + q2).is_zero()) continue;
        const auto a = v.quot_class(q1), b = v.quot_class(q2), s = v.quot_class(q1 + q2);
        for (std::size_t i = 0; i < s.coords.size(); ++i)
            CHECK(s.coords[i] == a.coords[i] + b.coords[i]);
    }
}

TEST_CASE("projective_empty: certificates in both directions") {
    const auto coords = projective_empty({P("x0", xyz), P("x1", xyz), P("x2", xyz)}, 4);
    CHECK(coords.verdict == Emptiness::empty);
    CHECK(coords.certificate_degree == 1);

    const auto conic_line = projective_empty({P("x0*x2-x1^2", xyz), P("x0", xyz)}, 6);
    CHECK(conic_line.verdict == Emptiness::nonempty);
    REQUIRE(conic_line.witness.has_value());
    // Substitute-and-solve oracle: the witness zeroes both generators.
    const RatVec& w = *conic_line.witness;
    CHECK(P("x0*x2-x1^2", xyz).eval(w) == 0);
    CHECK(P("x0", xyz).eval(w) == 0);
    CHECK(w == RatVec{Rat(0), Rat(0), Rat(1)});

    const auto pencil =
        projective_empty({P("x0*x2-x1^2", xyz), P("x0-x2", xyz), P("x0+x2", xyz)}, 6);
    CHECK(pencil.verdict == Emptiness::empty);
    CHECK(pencil.certificate_degree <= 2);

    CHECK_THROWS_AS(projective_empty({P("x0+x1^2", xyz)}, 3), ValidationError);
}

TEST_CASE("projective_empty: irrational zero locus is honestly inconclusive") {
    // x0^2 = 2 x1^2 and x2 = 0 has only irrational projective zeros, so
    // neither certificate can be produced within the caps.
    const auto res = projective_empty({P("x0^2 - 2*x1^2", xyz), P("x2", xyz)}, 8);
    CHECK(res.verdict == Emptiness::inconclusive);
    CHECK(!res.witness.has_value());
}

TEST_CASE("projective_empty verdicts are mutually exclusive") {
    // The empty certificate and a witness cannot coexist: witnesses evaluate
    // every generator to zero exactly, which the certificate forbids.
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Poly> gens;
        for (int i = 0; i < 2; ++i) {
            Poly g(3);
            for (const Monomial& m : monomials_of_degree(3, 1))
                g.add_term(m, Rat(static_cast<long>(rng.int_in(-2, 2))));
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        const auto res = projective_empty(gens, 5);
        if (res.verdict == Emptiness::nonempty) {
            for (const Poly& g : gens) CHECK(g.eval(*res.witness) == 0);
        }
    }
}
