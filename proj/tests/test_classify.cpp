#include <doctest.h>

#include "carleman/classify.hpp"
#include "carleman/codec.hpp"

using namespace carleman;

TEST_CASE("classify routes rows into the report groups") {
    TermList rows = {
        parse_row("1,1,0,0,2,2,1,0", Schema::Poly),   // time boundary
        parse_row("-4,5,5,0,0,2,0,1", Schema::Poly),  // space boundary (0,2)
        parse_row("4,1,0,0,3,3,0,0", Schema::Poly),   // energy order 3
        parse_row("16,7,6,0,0,0,0,0", Schema::Poly),  // energy order 0
        parse_row("2,1,0,1,0,1,0,0", Schema::Poly),   // cross u_t u_x
        parse_row("3,2,1,1,1,2,0,0", Schema::Poly),   // other bt=1 terminal shape
    };
    Report rep = classify(rows, BoundaryCondition::None, false);
    CHECK(rep.time_boundary.size() == 1);
    CHECK(rep.space_boundary.size() == 1);
    CHECK(rep.energy.count(3) == 1);
    CHECK(rep.energy.count(0) == 1);
    CHECK(rep.cross.size() == 1);
    CHECK(rep.cross_other.size() == 1);
    CHECK(rep.boundary_deleted.empty());
    CHECK(merged_difference(rep.all_input(), merge(rows)).empty());
}

TEST_CASE("classify rejects non-terminal rows") {
    CHECK_THROWS_AS(classify({parse_row("1,0,0,0,0,2,0,0", Schema::Poly)},
                             BoundaryCondition::None, false),
                    ContractError);
}

TEST_CASE("boundary filters delete by x-order") {
    TermList rows = {
        parse_row("1,0,0,0,3,3,0,1", Schema::Poly),  // u_xxx^2: survives both
        parse_row("1,0,0,0,1,3,0,1", Schema::Poly),  // u_x u_xxx: dies clamped
        parse_row("1,0,0,0,2,2,0,1", Schema::Poly),  // u_xx^2: dies hinged
        parse_row("1,0,0,1,0,2,0,1", Schema::Poly),  // u_t u_xx: dies both (x-orders 0, 2)
    };
    Report clamped = classify(rows, BoundaryCondition::Clamped, false);
    CHECK(clamped.space_boundary.size() == 2);
    CHECK(clamped.boundary_deleted.size() == 2);
    Report hinged = classify(rows, BoundaryCondition::Hinged, false);
    CHECK(hinged.space_boundary.size() == 2);
    CHECK(hinged.space_boundary.count({{0, 1}, {0, 3}}) == 1);
    CHECK(hinged.boundary_deleted.size() == 2);
    // the audit keeps every input row
    CHECK(merged_difference(clamped.all_input(), merge(rows)).empty());
}

TEST_CASE("grades split leading, subleading and rest") {
    TermList rows = {
        parse_row("120,3,2,0,2,2,0,0", Schema::Poly),
        parse_row("-48,2,0,0,2,2,0,0", Schema::Poly),
        parse_row("7,1,0,0,2,2,0,0", Schema::Poly),
        parse_row("5,3,0,0,2,2,0,0", Schema::Poly),  // same lam, lower mu-degree
    };
    auto g = grade_group(rows);
    REQUIRE(g.leading.size() == 1);
    CHECK(g.leading[0].coeff == 120);
    REQUIRE(g.subleading.size() == 1);
    CHECK(g.subleading[0].coeff == 5);
    CHECK(g.rest.size() == 2);
}

TEST_CASE("cross summary aggregates weight monomials") {
    TermList cross = {parse_row("2,1,0,1,0,1,0,0", Schema::Poly),
                      parse_row("3,1,0,1,0,1,0,0", Schema::Poly),
                      parse_row("-1,2,1,1,0,1,0,0", Schema::Poly)};
    auto b = cross_summary(merge(cross));
    REQUIRE(b.size() == 2);
    CHECK(b[0].coeff + b[1].coeff == 4);
    CHECK_THROWS_AS(cross_summary({parse_row("1,0,0,0,1,1,0,0", Schema::Poly)}),
                    ContractError);
}

TEST_CASE("sign report flips on odd negative powers") {
    SignContext ctx = SignContext::defaults(Schema::Poly);
    // mu < 0 by default: -4 lam^5 mu^5 ... is positive, -4 lam^5 mu^4 negative
    auto rep = sign_report({parse_row("-4,5,5,0,1,1,0,0", Schema::Poly),
                            parse_row("-4,5,4,0,1,1,0,0", Schema::Poly)},
                           ctx);
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].second == Sign::Positive);
    CHECK(rep[1].second == Sign::Negative);
    // unknown symbol with odd power -> indefinite
    SignContext empty;
    CHECK(sign_report({parse_row("-4,5,5,0,1,1,0,0", Schema::Poly)}, empty)[0].second ==
          Sign::Indefinite);
}

TEST_CASE("latex rendering") {
    CHECK(latex_term(parse_row("-4,5,5,0,0,2,0,1", Schema::Poly)) ==
          "-4(\\lambda^{5}\\mu^{5} w w_{xx})_{x}");
    CHECK(latex_term(parse_row("2,1,2,2,0,0,0,1,0,0,3,3,0,0", Schema::Exp)) ==
          "2\\lambda s^{2}\\phi_{x}^{2}\\varphi u_{xxx}^{2}");
    CHECK(latex_term(parse_row("1,1,0,1,0,1,1,0", Schema::Poly)) ==
          "1(\\lambda w_t w_x)_{t}");
}

TEST_CASE("table emitter round-trips its fixed rows") {
    TermList rows = {parse_row("4,1,0,0,3,3,0,0", Schema::Poly),
                     parse_row("-4,5,5,0,0,2,0,1", Schema::Poly)};
    Report rep = classify(rows, BoundaryCondition::None, false);
    std::string table = emit_table(rep);
    CHECK(table.find("4,1,0,0,3,3,0,0") != std::string::npos);
    CHECK(table.find("-4,5,5,0,0,2,0,1") != std::string::npos);
}
