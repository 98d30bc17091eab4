#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vdw/error.hpp"
#include "vdw/groebner.hpp"
#include "vdw/parser.hpp"

using namespace vdw;

namespace {
const std::vector<std::string> xyz{"x0", "x1", "x2"};
const std::vector<std::string> wxyz{"x0", "x1", "x2", "x3"};

Poly P(const std::string& text, const std::vector<std::string>& names) {
    return parse_poly(text, names);
}

// Oracle: recompute the S-polynomial and reduce it against the basis by the
// plain division algorithm.
Poly s_poly_remainder(const Poly& f, const Poly& g, const GroebnerBasis& gb) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const Poly tf = Poly::from_term(*l.quotient_by(f.leading_monomial()), 1 / f.leading_coeff());
    const Poly tg = Poly::from_term(*l.quotient_by(g.leading_monomial()), 1 / g.leading_coeff());
    return normal_form(tf * f - tg * g, gb);
}
}  // namespace

TEST_CASE("buchberger: already-reduced inputs stay put") {
    const auto gb = buchberger({P("x0", xyz), P("x1", xyz)});
    REQUIRE(gb.generators.size() == 2);
    CHECK(gb.reduced);
    CHECK(gb.generators[0] == P("x1", xyz));
    CHECK(gb.generators[1] == P("x0", xyz));

    const auto principal = buchberger({P("x0*x2-x1^2", xyz)});
    REQUIRE(principal.generators.size() == 1);
    CHECK(principal.generators[0] == P("x0*x2-x1^2", xyz));
}

TEST_CASE("buchberger: twisted cubic has a three-element reduced basis") {
    const std::vector<Poly> gens{P("x0*x2-x1^2", wxyz), P("x1*x3-x2^2", wxyz),
                                 P("x0*x3-x1*x2", wxyz)};
    const auto gb = buchberger(gens);
    CHECK(gb.generators.size() == 3);
    for (const Poly& g : gens) CHECK(normal_form(g, gb).is_zero());
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
        for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
            CHECK(s_poly_remainder(gb.generators[i], gb.generators[j], gb).is_zero());
}

TEST_CASE("buchberger rejects inhomogeneous input") {
    CHECK_THROWS_AS(buchberger({P("x0^2 + x1", xyz)}), Error);
}

TEST_CASE("normal_form: conic reduction fixed by graded-lex") {
    const auto gb = buchberger({P("x0*x2-x1^2", xyz)});
    // lead(x0*x2 - x1^2) = x0*x2, so x0*x2 reduces to x1^2.
    CHECK(normal_form(P("x0*x2", xyz), gb) == P("x1^2", xyz));
    CHECK(normal_form(P("x1^2", xyz), gb) == P("x1^2", xyz));
    CHECK(normal_form(P("(x0*x2-x1^2)*(x0+x1+x2)", xyz), gb).is_zero());
}

TEST_CASE("normal_form: linearity and idempotence") {
    const auto gb = buchberger({P("x0*x2-x1^2", xyz), P("x0^2-x1*x2", xyz)});
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly p = oracle::random_poly(rng, 3, 3);
        const Poly q = oracle::random_poly(rng, 3, 3);
        CHECK(normal_form(p + q, gb) == normal_form(normal_form(p, gb) + q, gb));
        CHECK(normal_form(normal_form(p, gb), gb) == normal_form(p, gb));
        // p - nf(p) lies in the ideal.
        CHECK(normal_form(p - normal_form(p, gb), gb).is_zero());
    }
}

TEST_CASE("normal_form: ideal members vanish") {
    const std::vector<Poly> gens{P("x0*x2-x1^2", wxyz), P("x1*x3-x2^2", wxyz),
                                 P("x0*x3-x1*x2", wxyz)};
    const auto gb = buchberger(gens);
    Rng rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        Poly member(4);
        for (const Poly& g : gens) member = member + oracle::random_poly(rng, 4, 2) * g;
        CHECK(normal_form(member, gb).is_zero());
    }
}

TEST_CASE("empty basis acts as the zero ideal") {
    const GroebnerBasis gb = buchberger({});
    const Poly p = P("x0^2 - x1*x2", xyz);
    CHECK(normal_form(p, gb) == p);
}
