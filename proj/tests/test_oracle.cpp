#include <doctest.h>

#include <cmath>

#include "carleman/codec.hpp"
#include "carleman/engine.hpp"
#include "carleman/oracle.hpp"

using namespace carleman;

TEST_CASE("Poly2 arithmetic") {
    Poly2 t = Poly2::variable_t(), x = Poly2::variable_x();
    Poly2 p = (t + x) * (t + x);  // t^2 + 2tx + x^2
    CHECK(p.eval(2, 3) == 25);
    CHECK(p.diff(1, 0).eval(2, 3) == 10);   // 2t + 2x
    CHECK(p.diff(1, 1).eval(2, 3) == 2);
    CHECK(p.diff(0, 3).zero());
    CHECK((p - p).zero());
    CHECK(x.pow(4).diff(0, 4).eval(0, 0) == 24);
}

TEST_CASE("expand_divergence undoes a flag by differentiation") {
    const auto& model = WeightModel::poly_psi();
    // (lam mu^3 w w_xx)_x = 6 lam mu^2 w w_xx + lam mu^3 w_x w_xx + lam mu^3 w w_xxx
    Term t = parse_row("1,1,3,0,0,2,0,1", Schema::Poly);
    auto out = merge(expand_divergence(t, model));
    REQUIRE(out.size() == 3);
    auto expected = merge({parse_row("6,1,2,0,0,2,0,0", Schema::Poly),
                           parse_row("1,1,3,0,1,2,0,0", Schema::Poly),
                           parse_row("1,1,3,0,0,3,0,0", Schema::Poly)});
    CHECK(merged_difference(out, expected).empty());
    // unflagged rows pass through
    Term plain = parse_row("2,1,0,0,1,1,0,0", Schema::Poly);
    auto same = expand_divergence(plain, model);
    REQUIRE(same.size() == 1);
    CHECK(same[0].coeff == 2);
}

TEST_CASE("time flags move the t-derivative into the first slot") {
    const auto& model = WeightModel::exp_rho();
    // (vphi^2 u_x^2)_t = 2 vphi vphi_t u_x^2 + 2 vphi^2 u_tx u_x
    Term t = parse_row("1,0,0,0,0,0,0,2,0,0,1,1,1,0", Schema::Exp);
    auto out = merge(expand_divergence(t, model));
    REQUIRE(out.size() == 2);
    for (const auto& r : out) {
        CHECK(r.coeff == 2);
        CHECK(r.flags.d_t == 0);
    }
}

TEST_CASE("verify_identity accepts reductions and rejects corruption") {
    const auto& model = WeightModel::poly_psi();
    TermList in = {parse_row("-4,5,5,0,0,3,0,0", Schema::Poly)};
    auto red = reduce(in, model);
    CHECK(verify_identity(in, red, model).ok);
    red[0].coeff += 1;
    auto bad = verify_identity(in, red, model);
    CHECK(!bad.ok);
    CHECK(!bad.diff.empty());
}

TEST_CASE("poly numeric evaluation is exact and rule-independent") {
    const auto& model = WeightModel::poly_psi();
    auto cfg = NumericConfig::poly_default();
    TermList in = {parse_row("-4,5,5,0,0,3,0,0", Schema::Poly),
                   parse_row("3,2,1,1,0,2,0,0", Schema::Poly)};
    auto red = reduce(in, model);
    auto a = numeric_eval_poly(in, cfg);
    auto b = numeric_eval_poly(red, cfg);
    REQUIRE(a.size() == cfg.samples.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("exp numeric evaluation matches within tolerance") {
    const auto& model = WeightModel::exp_rho();
    auto cfg = NumericConfig::exp_default();
    TermList in = {parse_row("-36,5,5,5,0,0,0,4,0,0,0,2,0,0", Schema::Exp),
                   parse_row("2,1,1,0,1,0,0,2,1,1,0,1,0,0", Schema::Exp)};
    auto red = reduce(in, model);
    auto a = numeric_eval_exp(in, cfg);
    auto b = numeric_eval_exp(red, cfg);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double scale = std::max({1.0, std::fabs(a[i]), std::fabs(b[i])});
        CHECK(std::fabs(a[i] - b[i]) / scale < 1e-9);
    }
}

TEST_CASE("exp numeric evaluation differentiates flags correctly") {
    // compare the dual-number derivative of a flagged row against a central
    // finite difference of the unflagged value
    auto cfg = NumericConfig::exp_default();
    Term flagged = parse_row("3,2,2,1,1,0,0,2,0,0,1,1,0,1", Schema::Exp);
    Term plain = flagged;
    plain.flags = {};
    const double h = 1e-6;
    for (auto& [tq, xq] : cfg.samples) {
        NumericConfig at = cfg;
        at.samples = {{tq, xq}};
        double d = numeric_eval_exp({flagged}, at)[0];
        NumericConfig lo = cfg, hi = cfg;
        lo.samples = {{tq, xq - Rational(1, 1000000)}};
        hi.samples = {{tq, xq + Rational(1, 1000000)}};
        double fd = (numeric_eval_exp({plain}, hi)[0] - numeric_eval_exp({plain}, lo)[0]) /
                    (2 * h);
        double scale = std::max({1.0, std::fabs(d), std::fabs(fd)});
        CHECK(std::fabs(d - fd) / scale < 1e-4);
    }
}

TEST_CASE("exp numeric rejects boundary samples") {
    auto cfg = NumericConfig::exp_default();
    cfg.samples = {{Rational(0), Rational(1, 2)}};
    CHECK_THROWS_AS(numeric_eval_exp({parse_row("1,0,0,0,0,0,0,1,0,0,0,0,0,0", Schema::Exp)},
                                     cfg),
                    Error);
}
