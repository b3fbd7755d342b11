#include <doctest.h>

#include <sstream>

#include "carleman/codec.hpp"

using namespace carleman;

TEST_CASE("fixed poly rows round-trip") {
    for (const std::string row : {"-4,5,5,0,0,3,0,0", "2,5,5,0,1,1,0,1", "960,5,2,0,0,0,0,0",
                                  "-1/2,3,0,1,0,0,1,0"}) {
        Term t = parse_row(row, Schema::Poly);
        CHECK(emit_row(t, RowFormat::Fixed) == row);
    }
}

TEST_CASE("fixed exp rows round-trip") {
    for (const std::string row :
         {"-36,5,5,5,0,0,0,4,0,0,0,2,0,0", "144,5,6,6,0,0,0,4,0,0,0,1,0,0",
          "2,1,2,2,0,0,0,1,0,0,3,3,0,0", "-1,2,3,1,1,1,0,2,1,1,0,2,0,0"}) {
        Term t = parse_row(row, Schema::Exp);
        CHECK(emit_row(t, RowFormat::Fixed) == row);
    }
}

TEST_CASE("fixed rows reject bad fields") {
    CHECK_THROWS_AS(parse_row("1,2,3", Schema::Poly), ParseError);
    CHECK_THROWS_AS(parse_row("1,-2,0,0,0,1,0,0", Schema::Poly), ParseError);  // negative power
    CHECK_THROWS_AS(parse_row("1,0,0,0,0,0,2,0", Schema::Poly), ParseError);   // flag > 1
    CHECK_THROWS_AS(parse_row("x,0,0,0,0,0,0,0", Schema::Poly), ParseError);
}

TEST_CASE("sparse rows carry gamma and open-ended symbols") {
    Term t = parse_row("-3/2; lam^2 gamma; phi(5) vphi_tt^2; (1,0)(0,1); (0,0)", Schema::Exp);
    CHECK(t.coeff == Rational(-3, 2));
    CHECK(t.scalars.gamma == 1);
    CHECK(t.factors.at(FactorSymbol::phi_deriv(5)) == 1);
    CHECK(t.factors.at(FactorSymbol::vphi_tt()) == 2);
    // no fixed column for these
    CHECK_THROWS_AS(emit_row(t, RowFormat::Fixed), Error);
    Term back = parse_row(emit_row(t, RowFormat::Sparse), Schema::Exp);
    CHECK(same_key(t, back));
    CHECK(t.coeff == back.coeff);
}

TEST_CASE("sparse parses canonicalize") {
    Term t = parse_row("1; lam; mu; (0,2)(0,1); (0,0)", Schema::Poly);
    CHECK(t.bilinear.first.x == 1);
    CHECK(t.bilinear.second.x == 2);
}

TEST_CASE("term files round-trip with header") {
    std::istringstream in("# schema=poly format=fixed\n"
                          "# a comment\n"
                          "\n"
                          "-4,5,5,0,0,3,0,0\n"
                          "2,1,0,0,1,1,0,0\n");
    TermFile f = read_term_file(in);
    CHECK(f.schema == Schema::Poly);
    CHECK(f.terms.size() == 2);
    std::ostringstream out;
    write_term_file(out, f);
    std::istringstream in2(out.str());
    TermFile g = read_term_file(in2);
    REQUIRE(g.terms.size() == 2);
    CHECK(same_key(f.terms[1], g.terms[1]));
}

TEST_CASE("missing header is an error") {
    std::istringstream in("-4,5,5,0,0,3,0,0\n");
    CHECK_THROWS_AS(read_term_file(in), ParseError);
}

TEST_CASE("unary files round-trip") {
    std::istringstream in("# schema=exp format=sparse kind=unary\n"
                          "-4; lam s; phi(1) vphi; (0,3); -\n"
                          "1; gamma; 1; (1,0); -\n");
    TermFile f = read_term_file(in);
    CHECK(f.unary);
    REQUIRE(f.unary_terms.size() == 2);
    CHECK(f.unary_terms[0].deriv.x == 3);
    CHECK(f.unary_terms[1].scalars.gamma == 1);
    std::ostringstream out;
    write_term_file(out, f);
    CHECK(out.str().find("kind=unary") != std::string::npos);
}
