#include <doctest.h>

#include "carleman/term.hpp"

using namespace carleman;

namespace {

Term poly(Rational c, int lam, int mu, DerivOrder a, DerivOrder b, DivergenceFlags f = {}) {
    Term t;
    t.coeff = std::move(c);
    t.schema = Schema::Poly;
    t.scalars.lam = lam;
    if (mu > 0) t.factors[FactorSymbol::mu()] = mu;
    t.bilinear = {a, b};
    t.flags = f;
    return t;
}

}  // namespace

TEST_CASE("rational parse and format") {
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(format_rational(Rational(-1, 2)) == "-1/2");
    CHECK(format_rational(Rational(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("canonicalize orders the bilinear slots") {
    // pure-x pair sorted ascending
    Term t = canonicalize(poly(1, 0, 0, {0, 3}, {0, 1}));
    CHECK(t.bilinear.first.x == 1);
    CHECK(t.bilinear.second.x == 3);
    // the t-order moves to the first slot
    t = poly(1, 0, 0, {0, 2}, {0, 0});
    t.bilinear.second = {1, 0};
    t = canonicalize(t);
    CHECK(t.bilinear.first == DerivOrder{1, 0});
    CHECK(t.bilinear.second == DerivOrder{0, 2});
}

TEST_CASE("canonicalize rejects schema violations") {
    Term t = poly(1, 1, 1, {0, 0}, {0, 1});
    t.scalars.s = 1;
    CHECK_THROWS_AS(canonicalize(t), SchemaError);

    Term e = poly(1, 1, 0, {0, 0}, {0, 1});
    e.factors[FactorSymbol::vphi()] = 1;  // exp symbol in a poly term
    CHECK_THROWS_AS(canonicalize(e), SchemaError);

    Term both = poly(1, 0, 0, {1, 0}, {0, 0});
    both.bilinear.second = {1, 1};
    CHECK_THROWS_AS(canonicalize(both), SchemaError);
}

TEST_CASE("merge sums like rows and drops zeros") {
    TermList list = {poly(3, 2, 1, {0, 1}, {0, 1}), poly(-1, 2, 1, {0, 1}, {0, 1}),
                     poly(5, 1, 0, {0, 0}, {0, 0}), poly(-5, 1, 0, {0, 0}, {0, 0})};
    auto m = merge(list);
    REQUIRE(m.size() == 1);
    CHECK(m[0].coeff == 2);
    CHECK(m[0].scalars.lam == 2);
}

TEST_CASE("merged_difference is empty iff equal") {
    TermList a = {poly(1, 1, 1, {0, 0}, {0, 2}), poly(2, 0, 0, {0, 1}, {0, 1})};
    TermList b = {poly(2, 0, 0, {0, 1}, {0, 1}), poly(1, 1, 1, {0, 2}, {0, 0})};
    CHECK(merged_difference(a, b).empty());
    b[0].coeff = 3;
    CHECK(!merged_difference(a, b).empty());
}

TEST_CASE("term_order is a deterministic total order") {
    TermList list = {poly(1, 0, 0, {0, 0}, {0, 0}, {0, 1}),
                     poly(1, 0, 0, {0, 0}, {0, 0}, {1, 0}),
                     poly(-20, 5, 4, {0, 1}, {0, 1}), poly(-40, 5, 4, {0, 1}, {0, 1}),
                     poly(1, 2, 0, {0, 0}, {0, 0})};
    sort_terms(list);
    // divergence rows first, x before t; coefficient is the last tiebreak
    CHECK(list[0].flags.d_x == 1);
    CHECK(list[1].flags.d_t == 1);
    CHECK(list[2].coeff == -40);
    CHECK(list[3].coeff == -20);
    TermList again = list;
    sort_terms(again);
    for (std::size_t i = 0; i < list.size(); ++i) CHECK(same_key(list[i], again[i]));
}

TEST_CASE("substitute_gamma_one folds the gamma column") {
    Term t = poly(2, 1, 0, {1, 0}, {0, 1});
    t.scalars.gamma = 1;
    Term u = poly(3, 1, 0, {1, 0}, {0, 1});
    auto m = substitute_gamma_one({t, u});
    REQUIRE(m.size() == 1);
    CHECK(m[0].coeff == 5);
    CHECK(m[0].scalars.gamma == 0);
}

TEST_CASE("factor symbol tokens round-trip") {
    for (auto sym : {FactorSymbol::mu(), FactorSymbol::phi_deriv(1), FactorSymbol::phi_deriv(7),
                     FactorSymbol::vphi(), FactorSymbol::vphi_t(), FactorSymbol::vphi_tt()}) {
        auto back = FactorSymbol::from_token(sym.token());
        REQUIRE(back.has_value());
        CHECK(*back == sym);
    }
    CHECK(!FactorSymbol::from_token("phi(0)").has_value());
    CHECK(!FactorSymbol::from_token("psi").has_value());
}
