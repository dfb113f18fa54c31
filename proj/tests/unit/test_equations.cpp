#include <cmath>
#include <vector>

#include "doctest.h"
#include "loewner/equations.hpp"
#include "loewner/genpairs.hpp"
#include "loewner/spectra.hpp"
#include "support.hpp"

using namespace loewner;

namespace {
ParamSet P(const char* s) { return ParamSet::parse(s); }
const double e = std::exp(1.0);
}  // namespace

TEST_CASE("douglas contraction scalar cases") {
    const auto id = douglas_contraction(HermitianMatrix::identity(2), HermitianMatrix::identity(2));
    CHECK(id.norm == doctest::Approx(1.0));
    const auto quarter = douglas_contraction(oracle::scalar(1.0), oracle::scalar(2.0));
    CHECK(quarter.solution(0, 0) == doctest::Approx(0.25));
    CHECK(quarter.norm == doctest::Approx(0.25));
    const auto big = douglas_contraction(oracle::scalar(9.0), oracle::scalar(2.0));
    CHECK(big.norm == doctest::Approx(2.25));
}

TEST_CASE("douglas factor solves G S G = H") {
    SplitMix64 rng(3);
    const HermitianMatrix h = random_pd(rng, 4, 1e2);
    const HermitianMatrix g = random_pd(rng, 4, 1e2);
    const auto d = douglas_contraction(h, g);
    const Matrix gsg = oracle::naive_product(oracle::naive_product(g.matrix(), d.solution.matrix()),
                                             g.matrix());
    CHECK(oracle::rel_frobenius(gsg, h.matrix()) < 1e-11);
}

TEST_CASE("order family: identity operands") {
    const HermitianMatrix id = HermitianMatrix::identity(3);
    for (auto side : {OrderSide::C4, OrderSide::C5}) {
        const auto rep = solve_order(id, id, P("p=3,t=0,r=1,s=1,n=1"), side);
        CHECK(rep.norm_S == doctest::Approx(1.0));
        CHECK(rep.equation_residual < 1e-14);
        CHECK(rep.contraction);
    }
}

TEST_CASE("order family: scalar examples") {
    const ParamSet ps = P("p=3,t=0,r=1,s=1,n=1");
    const auto ok = solve_order(oracle::scalar(4.0), oracle::scalar(1.0), ps, OrderSide::C4);
    CHECK(ok.solution(0, 0) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(ok.contraction);
    CHECK(ok.order_verdict.holds);
    CHECK(ok.equation_residual < 1e-14);

    const auto bad = solve_order(oracle::scalar(1.0), oracle::scalar(4.0), ps, OrderSide::C4);
    CHECK(bad.solution(0, 0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK_FALSE(bad.contraction);
    CHECK_FALSE(bad.order_verdict.holds);
}

TEST_CASE("chaotic family: scalar examples") {
    const auto same = solve_chaotic(oracle::scalar(e), oracle::scalar(e), chaotic_params_n1(1.0, 0.5),
                                    ChaoticSide::D4);
    CHECK(same.solution(0, 0) == doctest::Approx(1.0).epsilon(1e-13));

    const auto t = solve_chaotic(oracle::scalar(e * e), oracle::scalar(1.0), P("p=1,t=0,r=1/2,s=1,n=2"),
                                 ChaoticSide::D4);
    CHECK(t.solution(0, 0) == doctest::Approx(std::exp(-2.0 / 3.0)).epsilon(1e-14));
    CHECK(t.contraction);
    CHECK(t.order_verdict.kind == OrderKind::chaotic);
    CHECK(t.order_verdict.holds);

    const ParamSet cor = chaotic_params_n1(2.0, 1.0);
    CHECK(cor.get("s", "t") == doctest::Approx(4.0 / 3.0));
    const auto c = solve_chaotic(oracle::scalar(4.0), oracle::scalar(1.0), cor, ChaoticSide::D4);
    CHECK(c.solution(0, 0) == doctest::Approx(std::pow(4.0, 5.0 / 3.0) / 64.0).epsilon(1e-13));
}

TEST_CASE("complete families: scalar examples") {
    const HermitianMatrix id = HermitianMatrix::identity(2);
    const auto triv = solve(EquationFamily::complete_3_3, id, id, P("p=1,p0=0,r=1,n=0"));
    CHECK(triv.norm_S == doctest::Approx(1.0));
    CHECK(triv.equation_residual < 1e-14);

    const auto k33 = solve(EquationFamily::complete_3_3, oracle::scalar(4.0), oracle::scalar(1.0),
                            P("p=1,p0=0,r=1,n=0"));
    // K = a^r b^p0 = 4 at 1x1, so S = (a^r b^p) / K^2 = 4 / 16
    CHECK(k33.solution(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(k33.contraction);

    const auto edge = solve(EquationFamily::complete_3_11, oracle::scalar(4.0), oracle::scalar(2.0),
                            P("p=1,p0=1/2,r=0,n=1"));
    CHECK(edge.solution(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(edge.contraction);
}

TEST_CASE("every family matches its scalar closed form") {
    SplitMix64 rng(2024);
    const std::vector<std::pair<EquationFamily, ParamSet>> cases{
        {EquationFamily::order_C4, complete_params(EquationFamily::order_C4, P("p=2,t=1,r=1,n=1"))},
        {EquationFamily::order_C5, complete_params(EquationFamily::order_C5, P("p=2,t=1,r=1,n=1"))},
        {EquationFamily::chaotic_D4, chaotic_params_mn(2, 3)},
        {EquationFamily::chaotic_D5, chaotic_params_mn(2, 3)},
        {EquationFamily::complete_3_3, P("p=2.5,p0=0.25,r=0.5,n=1")},
        {EquationFamily::complete_3_5, P("p=2.5,p0=0.25,r=0.5,n=1")},
        {EquationFamily::complete_3_7, P("p=4.5,p0=0.25,r=1.5,n=1")},
        {EquationFamily::complete_3_9, P("p=4.5,p0=0.25,r=1.5,n=1")},
        {EquationFamily::complete_3_11, P("p=2,p0=1,r=1,n=2")},
        {EquationFamily::complete_3_13, P("p=2,p0=1,r=1,n=2")}};
    for (const auto& [family, ps] : cases) {
        for (int i = 0; i < 10; ++i) {
            const double b = std::exp(rng.uniform(-1.0, 1.0));
            const double a = b * std::exp(rng.uniform(0.0, 1.0));
            const auto rep = solve(family, oracle::scalar(a), oracle::scalar(b), ps);
            CHECK(oracle::rel_err(rep.solution(0, 0), oracle::equation_scalar(family, a, b, ps)) < 1e-12);
            CHECK(rep.contraction);
        }
    }
}

TEST_CASE("solvers on ordered pairs: residual and contraction") {
    GenSpec spec;
    spec.dim = 4;
    spec.condition_cap = 1e2;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        spec.seed = seed;
        const MatrixPair pr = random_ordered_pair(spec);
        for (auto f : {EquationFamily::order_C4, EquationFamily::order_C5}) {
            const auto rep = solve(f, pr.a, pr.b, complete_params(f, P("p=2,t=0.5,r=0,n=2")));
            CHECK(rep.equation_residual <= kEquationResidualBound);
            CHECK(rep.contraction);
        }
        const auto c = solve(EquationFamily::complete_3_7, pr.a, pr.b,
                             complete_params(EquationFamily::complete_3_7, P("p0=0.25,r=1.5,n=1")));
        CHECK(c.equation_residual <= kEquationResidualBound);
        CHECK(c.contraction);
    }
}

TEST_CASE("C-family witness tracks Loewner order on unordered pairs") {
    GenSpec spec;
    spec.dim = 3;
    spec.condition_cap = 1e2;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        spec.seed = seed;
        const auto pr = random_unordered_pair(spec, 100);
        REQUIRE(pr.has_value());
        const auto rep = solve(EquationFamily::order_C4, pr->a, pr->b, order_witness_params(1.0));
        CHECK_FALSE(rep.contraction);
        CHECK_FALSE(rep.order_verdict.holds);
        // S = A^{-1/2} B A^{-1/2} at the witness parameters
        const HermitianMatrix ai = power(pr->a, -0.5);
        CHECK(relative_frobenius_error(rep.solution.matrix(), congruence(pr->b, ai).matrix()) < 1e-12);
    }
}

TEST_CASE("D-family witness is flagged approximate") {
    const auto rep = solve(EquationFamily::chaotic_D4, oracle::scalar(2.0), oracle::scalar(1.0),
                           chaotic_witness_params(64));
    CHECK(rep.approximate);
    CHECK(rep.contraction);
    CHECK_FALSE(solve(EquationFamily::chaotic_D4, oracle::scalar(2.0), oracle::scalar(1.0),
                      chaotic_params_mn(1, 1))
                    .approximate);
}

TEST_CASE("complete_params") {
    CHECK(complete_params(EquationFamily::order_C4, P("p=3,t=0,r=1,s=1")).get_n("t") == 1);
    CHECK(complete_params(EquationFamily::order_C4, P("p=2,t=0,r=0,s=1")).get_n("t") == 1);
    CHECK(complete_params(EquationFamily::chaotic_D4, P("p=1,t=1/2,r=1/3,n=3")).get("s", "t") ==
          doctest::Approx(2.0));
    CHECK(chaotic_params_mn(2, 3).get("s", "t") == doctest::Approx(2.0));
    CHECK(complete_params(EquationFamily::complete_3_3, P("p0=0,r=1,n=0")).get("p", "t") ==
          doctest::Approx(1.0));
    CHECK(complete_params(EquationFamily::complete_3_11, P("p0=1/2,r=0,n=1")).get("p", "t") ==
          doctest::Approx(1.0));
    // n must come out integral
    CHECK_THROWS_AS((void)complete_params(EquationFamily::order_C4, P("p=2.5,t=0,r=0,s=1")), ParamError);
    // two unknowns
    CHECK_THROWS_AS((void)complete_params(EquationFamily::order_C4, P("p=2,t=0,r=0")), ParamError);
}

TEST_CASE("constraint violations are rejected") {
    const HermitianMatrix id = HermitianMatrix::identity(2);
    CHECK_THROWS_AS((void)solve(EquationFamily::order_C4, id, id, P("p=3,t=0,r=1,s=1,n=2")), ParamError);
    CHECK_THROWS_AS((void)solve(EquationFamily::complete_3_3, id, id, P("p=2,p0=0,r=1,n=0")), ParamError);
}

TEST_CASE("scaled chaotic check") {
    const auto one = scaled_chaotic_check(oracle::scalar(1.0), oracle::scalar(1.0), e, 1, 1);
    CHECK(one.scaled_order.holds);
    CHECK(one.report.contraction);

    const auto no = scaled_chaotic_check(oracle::scalar(1.0), oracle::scalar(std::pow(e, 4.0)), e, 1, 1);
    CHECK_FALSE(no.scaled_order.holds);
    CHECK_FALSE(no.report.contraction);

    GenSpec spec;
    spec.dim = 3;
    spec.seed = 5;
    spec.condition_cap = 1e2;
    const MatrixPair pr = random_chaotic_pair(spec);
    const auto plain = solve(EquationFamily::chaotic_D4, pr.a, pr.b, chaotic_params_mn(2, 2));
    const auto unit = scaled_chaotic_check(pr.a, pr.b, 1.0, 2, 2);
    CHECK(relative_frobenius_error(unit.report.solution.matrix(), plain.solution.matrix()) < 1e-13);
}
