#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vdw/error.hpp"
#include "vdw/nochka.hpp"
#include "vdw/rng.hpp"
#include "vdw/simplex.hpp"

#include <cmath>
#include <numeric>

using namespace vdw;

namespace {
RatVec vec2(long a, long b) { return {Rat(a), Rat(b)}; }
RatVec vec3(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

// q = 4 pairwise independent vectors in Q^2: the general-position case.
std::vector<RatVec> four_general() {
    return {vec2(1, 0), vec2(0, 1), vec2(1, 1), vec2(1, -1)};
}

// q = 5 pairwise independent vectors in Q^2.
std::vector<RatVec> five_vectors() {
    return {vec2(1, 0), vec2(0, 1), vec2(1, 1), vec2(1, -1), vec2(2, 1)};
}

// Exhaustive oracle for the product-selection property.
void audit_selection(const WeightSystem& ws, Rng& rng, int draws) {
    std::vector<int> all(static_cast<std::size_t>(ws.q()));
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> subsets;
    std::vector<int> idx(static_cast<std::size_t>(ws.N() + 1));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        subsets.push_back(idx);
        int j = ws.N();
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == ws.q() - (ws.N() + 1) + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t <= ws.N(); ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    for (int d = 0; d < draws; ++d) {
        std::vector<double> e(static_cast<std::size_t>(ws.q()));
        for (auto& v : e) v = std::exp(10.0 * rng.unit());
        for (const auto& r : subsets) {
            const auto r0 = select_R0(r, e, ws);
            CHECK(static_cast<int>(r0.size()) == ws.k() + 1);
            CHECK(ws.rank(r0) == ws.k() + 1);
            double lhs = 0.0, rhs = 0.0;
            for (int i : r)
                lhs += to_double(ws.omegas()[static_cast<std::size_t>(i)]) *
                       std::log(e[static_cast<std::size_t>(i)]);
            for (int i : r0) rhs += std::log(e[static_cast<std::size_t>(i)]);
            CHECK(lhs <= rhs + 1e-9);
        }
    }
}
}  // namespace

TEST_CASE("exact simplex: small reference problems") {
    // min -x - y st x + 2y <= 4, 3x + y <= 6, optimum at (8/5, 6/5).
    std::vector<lp::Constraint> cs{{{Rat(1), Rat(2)}, lp::Rel::le, Rat(4)},
                                   {{Rat(3), Rat(1)}, lp::Rel::le, Rat(6)}};
    const auto r = lp::solve(2, cs, {Rat(-1), Rat(-1)});
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.x[0] == make_rat(8, 5));
    CHECK(r.x[1] == make_rat(6, 5));
    CHECK(r.objective == make_rat(-14, 5));

    // Equality + bound: min x st x + y = 3, y <= 1 -> x = 2.
    std::vector<lp::Constraint> cs2{{{Rat(1), Rat(1)}, lp::Rel::eq, Rat(3)},
                                    {{Rat(0), Rat(1)}, lp::Rel::le, Rat(1)}};
    const auto r2 = lp::solve(2, cs2, {Rat(1), Rat(0)});
    REQUIRE(r2.status == lp::Status::optimal);
    CHECK(r2.x[0] == 2);

    // Infeasible: x <= 1, x >= 2.
    std::vector<lp::Constraint> cs3{{{Rat(1)}, lp::Rel::le, Rat(1)},
                                    {{Rat(1)}, lp::Rel::ge, Rat(2)}};
    CHECK(lp::solve(1, cs3, {Rat(1)}).status == lp::Status::infeasible);
}

TEST_CASE("compute_weights: general position q=4, N=1, k=1 gives all ones") {
    const auto ws = compute_weights(four_general(), 1, 1);
    CHECK(ws.omega_tilde() == 1);
    for (const Rat& w : ws.omegas()) CHECK(w == 1);
    // Coupling identity: 4 = 1 * (4 - 2 + 1 - 1) + 2.
    Rat sum(0);
    for (const Rat& w : ws.omegas()) sum += w;
    CHECK(sum == ws.sum_identity_rhs());
    CHECK(verify_weights(ws).ok());
}

TEST_CASE("compute_weights: q=5, N=2, k=1 forces all weights to 1/2") {
    const auto ws = compute_weights(five_vectors(), 2, 1);
    CHECK(ws.omega_tilde() == make_rat(1, 2));
    for (const Rat& w : ws.omegas()) CHECK(w == make_rat(1, 2));
    const auto report = verify_weights(ws);
    CHECK(report.ok());
    CHECK(report.violating_subsets.empty());
}

TEST_CASE("compute_weights rejects q at the feasibility bound") {
    // q = 2N - k + 1 = 2 with N = 1, k = 1.
    CHECK_THROWS_AS(compute_weights({vec2(1, 0), vec2(0, 1)}, 1, 1), ValidationError);
}

TEST_CASE("compute_weights rejects families out of position") {
    // A pair of proportional vectors breaks 1-subgeneral position in Q^2.
    CHECK_THROWS_AS(compute_weights({vec2(1, 0), vec2(2, 0), vec2(0, 1), vec2(1, 1)}, 1, 1),
                    ValidationError);
}

TEST_CASE("verify_weights flags tampered systems") {
    const auto ws = compute_weights(four_general(), 1, 1);
    RatVec tampered = ws.omegas();
    tampered[0] = 2;
    const WeightSystem bad1(tampered, Rat(2), ws.N(), ws.k(), ws.vectors());
    CHECK(!verify_weights(bad1).positivity_ok);

    RatVec broken_sum = ws.omegas();
    broken_sum[1] = make_rat(1, 2);
    const WeightSystem bad2(broken_sum, Rat(1), ws.N(), ws.k(), ws.vectors());
    CHECK(!verify_weights(bad2).sum_identity_ok);
}

TEST_CASE("select_R0: equal values accept any full-rank subset") {
    const auto ws = compute_weights(five_vectors(), 2, 1);
    const std::vector<int> r{0, 1, 2};
    const std::vector<double> e(5, 1.0);
    const auto r0 = select_R0(r, e, ws);
    CHECK(r0.size() == 2);
    CHECK(ws.rank(r0) == 2);
}

TEST_CASE("select_R0: documented weighted-product example") {
    const auto ws = compute_weights(five_vectors(), 2, 1);
    // E = (e^4, e, 1, 1, 1) on R = {0,1,2}: weighted product e^{2.5}, best
    // full-rank pair {0,1} with product e^5.
    const std::vector<int> r{0, 1, 2};
    const std::vector<double> e{std::exp(4.0), std::exp(1.0), 1.0, 1.0, 1.0};
    const auto r0 = select_R0(r, e, ws);
    CHECK(r0 == std::vector<int>{0, 1});
}

TEST_CASE("select_R0 skips rank-deficient subsets") {
    // N = 2, k = 1 in Q^2 with vectors 0 and 1 proportional: pairs {0,1} are
    // rank deficient and must be skipped even with the largest product.
    const std::vector<RatVec> vectors{vec2(1, 0), vec2(2, 0), vec2(0, 1), vec2(1, 1),
                                      vec2(1, -1), vec2(3, 1)};
    const auto ws = compute_weights(vectors, 2, 1);
    const std::vector<int> r{0, 1, 2};
    const std::vector<double> e{std::exp(9.0), std::exp(8.0), 1.0, 1.0, 1.0, 1.0};
    const auto r0 = select_R0(r, e, ws);
    CHECK(ws.rank(r0) == 2);
    CHECK(r0 == std::vector<int>{0, 2});
}

TEST_CASE("select_R0 raises when a corrupted weight system breaks the bound") {
    const auto good = compute_weights(five_vectors(), 2, 1);
    RatVec inflated = good.omegas();
    inflated[0] = 10;  // wildly over the cap
    const WeightSystem broken(inflated, Rat(10), good.N(), good.k(), good.vectors());
    const std::vector<int> r{0, 1, 2};
    const std::vector<double> e{std::exp(10.0), 1.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(select_R0(r, e, broken), Error);
}

TEST_CASE("selection audit: q=5 N=2 k=1 with seeded random values") {
    const auto ws = compute_weights(five_vectors(), 2, 1);
    Rng rng(101);
    audit_selection(ws, rng, 100);
}

TEST_CASE("slack case redistributes weight away from a dependent triple") {
    // q = 8, N = 4, k = 2 with three proportional vectors: the cap is forced
    // to 1/2 (five generic members must absorb the coupling sum), and the
    // dependent triple shares a total weight of 1. Expected weights computed
    // by hand from the binding constraints.
    const std::vector<RatVec> vectors{vec3(1, 0, 0), vec3(2, 0, 0), vec3(3, 0, 0),
                                      vec3(0, 1, 0), vec3(0, 0, 1), vec3(1, 1, 1),
                                      vec3(1, 2, 4), vec3(1, 3, 9)};
    const auto ws = compute_weights(vectors, 4, 2);
    CHECK(ws.omega_tilde() == make_rat(1, 2));
    for (int i = 0; i < 3; ++i) CHECK(ws.omegas()[static_cast<std::size_t>(i)] == make_rat(1, 3));
    for (int i = 3; i < 8; ++i) CHECK(ws.omegas()[static_cast<std::size_t>(i)] == make_rat(1, 2));
    const auto report = verify_weights(ws);
    CHECK(report.ok());

    Rng rng(103);
    audit_selection(ws, rng, 5);
}

TEST_CASE("general-position degeneration: q=6 in Q^3 gives all ones") {
    const std::vector<RatVec> vectors{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1),
                                      vec3(1, 1, 1), vec3(1, 2, 4), vec3(1, 3, 9)};
    const auto ws = compute_weights(vectors, 2, 2);
    CHECK(ws.omega_tilde() == 1);
    for (const Rat& w : ws.omegas()) CHECK(w == 1);
    CHECK(verify_weights(ws).ok());
}
