#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carleman/rational.hpp"

namespace carleman {

// POLY: weight prefix lambda^a mu^m with mu = 2(x-x0).
// EXP:  weight prefix lambda^a s^b over phi-derivatives and varphi factors.
enum class Schema : std::uint8_t { Poly, Exp };

std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);

// One weight-factor symbol. PhiDeriv(k) is the k-th x-derivative of the
// spatial weight phi (open-ended k >= 1); VPhi is e^{s phi}/(t(T-t)), VPhiT
// its t-derivative and VPhiTT the terminal second t-derivative.
struct FactorSymbol {
    enum class Kind : std::uint8_t { Mu = 0, PhiDeriv = 1, VPhi = 2, VPhiT = 3, VPhiTT = 4 };
    Kind kind = Kind::Mu;
    int order = 0;  // PhiDeriv only

    friend auto operator<=>(const FactorSymbol&, const FactorSymbol&) = default;

    static FactorSymbol mu() { return {Kind::Mu, 0}; }
    static FactorSymbol phi_deriv(int k);
    static FactorSymbol vphi() { return {Kind::VPhi, 0}; }
    static FactorSymbol vphi_t() { return {Kind::VPhiT, 0}; }
    static FactorSymbol vphi_tt() { return {Kind::VPhiTT, 0}; }

    bool belongs_to(Schema s) const;
    std::string token() const;  // codec spelling: mu, phi(3), vphi, vphi_t, vphi_tt
    std::string latex() const;
    static std::optional<FactorSymbol> from_token(std::string_view tok);
};

struct ScalarExponents {
    int lam = 0;
    int s = 0;
    int gamma = 0;
    friend auto operator<=>(const ScalarExponents&, const ScalarExponents&) = default;
};

// Sparse exponent map; canonical form stores no zero exponents.
using FactorExponents = std::map<FactorSymbol, int>;

struct DerivOrder {
    int t = 0;
    int x = 0;
    friend auto operator<=>(const DerivOrder&, const DerivOrder&) = default;
};

// w_{t^{bt} x^{bx}} * w_{x^{cx}}; the second slot never carries a t-order.
struct BilinearPart {
    DerivOrder first;
    DerivOrder second;
    friend auto operator<=>(const BilinearPart&, const BilinearPart&) = default;
};

struct DivergenceFlags {
    int d_t = 0;
    int d_x = 0;
    friend auto operator<=>(const DivergenceFlags&, const DivergenceFlags&) = default;
};

struct Term {
    Rational coeff;
    Schema schema = Schema::Poly;
    ScalarExponents scalars;
    FactorExponents factors;
    BilinearPart bilinear;
    DivergenceFlags flags;
};

using TermList = std::vector<Term>;

// A single-derivative term (weight monomial times one derivative of w); the
// conjugated-operator expansions live in this shape before multiplication.
struct UnaryTerm {
    Rational coeff;
    Schema schema = Schema::Poly;
    ScalarExponents scalars;
    FactorExponents factors;
    DerivOrder deriv;
};

using UnaryList = std::vector<UnaryTerm>;

// Weight monomial without any w-derivative; differentiation rules and the
// cross aggregate B are expressed with these.
struct WeightMonomial {
    Rational coeff;
    ScalarExponents scalars;
    FactorExponents factors;
};

// Swaps the bilinear slots into canonical order (pure-x first slot never
// above the second), prunes zero exponents and validates the schema.
Term canonicalize(Term term);

// Equality of everything except the coefficient.
bool same_key(const Term& a, const Term& b);

// The deterministic total order: boundary flags first, then bilinear shape,
// scalar exponents, factor exponents, coefficient last.
std::strong_ordering term_order(const Term& a, const Term& b);
bool term_less(const Term& a, const Term& b);

void sort_terms(TermList& list);

// Canonicalizes, sums like terms, drops zeros, sorts. Throws on mixed schemas.
TermList merge(TermList list);

// list := merge(list + extra)
TermList merged_sum(TermList list, const TermList& extra);

// a - b as a merged list (empty iff equal as multisets of monomials).
TermList merged_difference(const TermList& a, const TermList& b);

UnaryList merge_unary(UnaryList list);

Term scale(Term t, const Rational& c);
TermList scale(TermList list, const Rational& c);

// gamma = 1: folds the gamma exponent away, then re-merges.
TermList substitute_gamma_one(TermList list);
UnaryList substitute_gamma_one(UnaryList list);

int total_factor_degree(const FactorExponents& f);

}  // namespace carleman
