#pragma once

#include <utility>
#include <vector>

#include "carleman/term.hpp"
#include "carleman/weight_model.hpp"

namespace carleman {

// Dense-enough bivariate polynomial over Rational in (t, x); the exact
// evaluation side of the oracle.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 constant(Rational c);
    static Poly2 variable_t();
    static Poly2 variable_x();

    void add_monomial(int t_deg, int x_deg, Rational c);
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 diff(int t_times, int x_times) const;
    Poly2 pow(int n) const;
    Rational eval(const Rational& t, const Rational& x) const;
    bool zero() const { return coeffs_.empty(); }

    // f(t_deg, x_deg, coeff) over all monomials
    template <class F>
    void for_each(F&& f) const {
        for (const auto& [k, c] : coeffs_) f(k.first, k.second, c);
    }

private:
    std::map<std::pair<int, int>, Rational> coeffs_;
    void prune();
};

struct NumericConfig {
    Rational x0 = 2, t0 = 1, beta = 1, T = 2, L = 1;
    Rational s_val = 3, lam_val = 5, gamma_val = 1;
    Poly2 w;                 // rational test polynomial w(t, x)
    Poly2 phi;               // spatial weight phi(x), EXP mode (x-only)
    std::vector<std::pair<Rational, Rational>> samples;  // (t, x)

    static NumericConfig poly_default();
    static NumericConfig exp_default();
};

// Removes a divergence flag by exact formal differentiation (full product
// rule across weight prefix and both bilinear slots); unflagged terms pass
// through. Exact; inverse of the flag-introducing rewrites.
TermList expand_divergence(const Term& term, const WeightModel& model);
TermList expand_divergence_all(const TermList& list, const WeightModel& model);

struct IdentityCheck {
    bool ok = false;
    TermList diff;  // merged(expand(output)) - merged(expand(input)); empty iff ok
};

IdentityCheck verify_identity(const TermList& input, const TermList& output,
                              const WeightModel& model);

// POLY mode: exact rational evaluation with mu = 2(x - x0) and the config's
// polynomial w; independent of the rewrite rules (flags are removed by
// polynomial differentiation, not by the symbol table).
std::vector<Rational> numeric_eval_poly(const TermList& list, const NumericConfig& cfg);

// EXP mode: double evaluation with vphi = e^{s phi(x)}/(t(T-t)) in closed
// form; flagged rows are differentiated with hand-coded closed-form factor
// derivatives. Throws on sample points with t(T-t) = 0.
std::vector<double> numeric_eval_exp(const TermList& list, const NumericConfig& cfg);

}  // namespace carleman
