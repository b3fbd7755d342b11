#pragma once

#include <vector>

#include "carleman/term.hpp"

namespace carleman {

enum class Direction : std::uint8_t { T, X };

// Symbol table of a weight function: for every factor symbol, its exact t-
// and x-derivative as a finite linear combination of factor products.
//
//   poly-psi: single symbol mu, d/dx mu = 2 (pure scalar), d/dt mu = 0.
//   exp-rho:  d/dx phi(k) = phi(k+1), d/dx vphi = s*phi(1)*vphi,
//             d/dt vphi = vphi_t, d/dx vphi_t = s*phi(1)*vphi_t,
//             d/dt vphi_t = vphi_tt, vphi_tt terminal.
class WeightModel {
public:
    Schema schema() const { return schema_; }
    const std::string& name() const { return name_; }

    bool owns(const FactorSymbol& sym) const;

    // Derivative of a single symbol; empty list when the derivative is zero.
    // Throws SchemaError for vphi_tt or a foreign symbol.
    std::vector<WeightMonomial> diff_symbol(const FactorSymbol& sym, Direction d) const;

    static const WeightModel& poly_psi();
    static const WeightModel& exp_rho();
    static const WeightModel& for_schema(Schema s);

private:
    WeightModel(Schema schema, std::string name) : schema_(schema), name_(std::move(name)) {}
    Schema schema_;
    std::string name_;
};

// Exact product-rule expansion of the derivative of a weight prefix
// (coefficient 1 assumed; the caller scales). Input scalar exponents are
// carried through and rule-induced scalar powers (the s in d/dx vphi) added.
std::vector<WeightMonomial> diff_factor_product(const FactorExponents& factors,
                                                const ScalarExponents& scalars,
                                                Direction direction,
                                                const WeightModel& model);

// A monomial in the rho-derivatives; rho_xxxx is deliberately unsupported.
struct RhoMonomial {
    Rational coeff;
    int lam = 0;
    int rho_x = 0;
    int rho_xx = 0;
    int rho_xxx = 0;
    int rho_xxxx = 0;  // never expandable; any occurrence is an error
};

// Substitutes rho_x = s phi(1) vphi, rho_xx = s^2 phi(1)^2 vphi + s phi(2) vphi,
// rho_xxx = s^3 phi(1)^3 vphi + 3 s^2 phi(1) phi(2) vphi + s phi(3) vphi and
// expands fully into EXP weight monomials.
std::vector<WeightMonomial> expand_rho_powers(const std::vector<RhoMonomial>& expr);

std::vector<WeightMonomial> merge_weight_monomials(std::vector<WeightMonomial> list);

}  // namespace carleman
