#include <doctest.h>

#include <random>

#include "carleman/codec.hpp"
#include "carleman/engine.hpp"
#include "carleman/oracle.hpp"

using namespace carleman;

TEST_CASE("termination predicate") {
    CHECK(is_terminal(parse_row("1,0,0,0,1,1,0,0", Schema::Poly)));   // w_x^2
    CHECK(is_terminal(parse_row("1,0,0,1,0,1,0,0", Schema::Poly)));   // w_t w_x
    CHECK(is_terminal(parse_row("1,0,0,0,0,2,0,1", Schema::Poly)));   // flagged
    CHECK(is_terminal(parse_row("0,0,0,0,0,3,0,0", Schema::Poly)));   // zero row
    CHECK(!is_terminal(parse_row("1,0,0,0,0,2,0,0", Schema::Poly)));
    CHECK(!is_terminal(parse_row("1,0,0,1,1,1,0,0", Schema::Poly)));  // w_tx w_x
}

TEST_CASE("diagonal time rule halves and differentiates the weight") {
    // poly: mu_t = 0, so only the flagged row appears
    auto out = rewrite_step(parse_row("6,2,3,1,2,2,0,0", Schema::Poly),
                            WeightModel::poly_psi());
    REQUIRE(out.size() == 1);
    CHECK(out[0].coeff == 3);
    CHECK(out[0].flags.d_t == 1);
    CHECK(out[0].bilinear.first.t == 0);

    // exp: -1/2 d_t(vphi^4) produces a vphi_t correction
    auto exp_out = rewrite_step(parse_row("6,2,2,2,0,0,0,4,0,1,2,2,0,0", Schema::Exp),
                                WeightModel::exp_rho());
    REQUIRE(exp_out.size() == 2);
    CHECK(exp_out[0].flags.d_t + exp_out[1].flags.d_t == 1);
    for (const auto& t : exp_out)
        if (t.flags.d_t == 0) {
            CHECK(t.coeff == -12);
            CHECK(t.factors.at(FactorSymbol::vphi()) == 3);
            CHECK(t.factors.at(FactorSymbol::vphi_t()) == 1);
        }
}

TEST_CASE("adjacent halving matches the worked poly row") {
    auto out = rewrite_step(parse_row("-320,5,3,0,0,1,0,0", Schema::Poly),
                            WeightModel::poly_psi());
    auto expected = TermList{parse_row("-160,5,3,0,0,0,0,1", Schema::Poly),
                             parse_row("960,5,2,0,0,0,0,0", Schema::Poly)};
    CHECK(merged_difference(merge(out), merge(expected)).empty());
}

TEST_CASE("general rule peels one derivative") {
    auto out = rewrite_step(parse_row("-4,5,5,0,0,3,0,0", Schema::Poly),
                            WeightModel::poly_psi());
    auto expected = TermList{parse_row("-4,5,5,0,0,2,0,1", Schema::Poly),
                             parse_row("4,5,5,0,1,2,0,0", Schema::Poly),
                             parse_row("40,5,4,0,0,2,0,0", Schema::Poly)};
    CHECK(merged_difference(merge(out), merge(expected)).empty());
}

TEST_CASE("rewrite children shrink the gap measure") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ord(0, 4), coin(0, 1), mu(0, 5);
    const auto& model = WeightModel::poly_psi();
    int seen = 0;
    while (seen < 500) {
        Term t;
        t.schema = Schema::Poly;
        t.coeff = 3;
        t.scalars.lam = mu(rng);
        if (int m = mu(rng); m > 0) t.factors[FactorSymbol::mu()] = m;
        t.bilinear.first = {coin(rng), ord(rng)};
        t.bilinear.second = {0, ord(rng)};
        t = canonicalize(std::move(t));
        if (is_terminal(t)) continue;
        ++seen;
        int parent = gap_measure(t);
        for (const auto& child : rewrite_step(t, model)) {
            if (!is_terminal(child)) CHECK(gap_measure(child) < parent);
        }
    }
}

TEST_CASE("every rewrite step preserves the identity") {
    const auto& model = WeightModel::exp_rho();
    Term t = parse_row("-36,5,5,5,0,0,0,4,0,0,0,2,0,0", Schema::Exp);
    auto out = rewrite_step(t, model);
    CHECK(verify_identity({t}, out, model).ok);
}

TEST_CASE("reduce returns sorted terminal rows without merging") {
    const auto& model = WeightModel::poly_psi();
    // two parents both yield a 40 lam^5 mu^4 w w_xx descendant chain; rows
    // stay separate in the output
    TermList in = {parse_row("-4,5,5,0,0,3,0,0", Schema::Poly),
                   parse_row("-4,5,5,0,0,3,0,0", Schema::Poly)};
    auto out = reduce(in, model);
    CHECK(out.size() == 14);
    for (const auto& t : out) CHECK(is_terminal(t));
    for (std::size_t i = 1; i < out.size(); ++i)
        CHECK(term_order(out[i - 1], out[i]) != std::strong_ordering::greater);
    CHECK(verify_identity(in, out, model).ok);
}

TEST_CASE("reduce drops zero rows and rejects terminal-step calls") {
    const auto& model = WeightModel::poly_psi();
    CHECK(reduce({parse_row("0,1,1,0,0,3,0,0", Schema::Poly)}, model).empty());
    CHECK_THROWS_AS(rewrite_step(parse_row("1,0,0,0,1,1,0,0", Schema::Poly), model),
                    ContractError);
}
