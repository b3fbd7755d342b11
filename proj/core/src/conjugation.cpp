#include "carleman/conjugation.hpp"

#include <algorithm>

namespace carleman {

namespace {

UnaryTerm from_monomial(Schema schema, const WeightMonomial& m, DerivOrder deriv,
                        const Rational& scale_by = 1) {
    UnaryTerm t;
    t.schema = schema;
    t.coeff = m.coeff * scale_by;
    t.scalars = m.scalars;
    t.factors = m.factors;
    t.deriv = deriv;
    return t;
}

// ell_x as a weight monomial list: lambda*mu (poly) or lambda*s*phi(1)*vphi (exp).
std::vector<WeightMonomial> ell_x(const WeightModel& model) {
    if (model.schema() == Schema::Poly)
        return {WeightMonomial{Rational(1), ScalarExponents{1, 0, 0}, {{FactorSymbol::mu(), 1}}}};
    return expand_rho_powers({RhoMonomial{Rational(1), 1, 1, 0, 0}});
}

// E_{k+1} = d/dx E_k - ell_x * E_k, starting from E_0 = w.
UnaryList apply_conjugated_dx(const UnaryList& e, const WeightModel& model) {
    UnaryList out;
    const auto lx = ell_x(model);
    for (const auto& t : e) {
        // d/dx of the weight prefix
        for (const auto& mono : diff_factor_product(t.factors, t.scalars, Direction::X, model)) {
            UnaryTerm d = from_monomial(t.schema, mono, t.deriv, t.coeff);
            out.push_back(std::move(d));
        }
        // derivative lands on w
        UnaryTerm up = t;
        up.deriv.x += 1;
        out.push_back(std::move(up));
        // - ell_x * term
        for (const auto& mono : lx) {
            UnaryTerm m = t;
            m.coeff *= -mono.coeff;
            m.scalars.lam += mono.scalars.lam;
            m.scalars.s += mono.scalars.s;
            for (const auto& [sym, e2] : mono.factors) m.factors[sym] += e2;
            out.push_back(std::move(m));
        }
    }
    return merge_unary(std::move(out));
}

}  // namespace

Conjugation conjugate(OperatorSpec op, const WeightModel& model) {
    Conjugation result;
    result.schema = model.schema();

    UnaryList e = {UnaryTerm{Rational(1), model.schema(), {}, {}, {0, 0}}};
    const int order = op.order == OperatorOrder::Second ? 2 : 4;
    for (int k = 0; k < order; ++k) e = apply_conjugated_dx(e, model);
    result.expansion = std::move(e);

    if (op.order == OperatorOrder::Fourth && op.gamma_present) {
        // theta gamma dt(theta^{-1} w) = gamma w_t - gamma ell_t w; the second
        // piece has no representable symbol and stays an omission marker.
        UnaryTerm wt{Rational(1), model.schema(), ScalarExponents{0, 0, 1}, {}, {1, 0}};
        result.expansion.push_back(std::move(wt));
        result.expansion = merge_unary(std::move(result.expansion));
        result.omitted_ell_t = true;
    }
    return result;
}

namespace {

void push(UnaryList& list, Schema schema, const std::vector<WeightMonomial>& monos,
          const Rational& scale_by, DerivOrder deriv) {
    for (const auto& m : monos) list.push_back(from_monomial(schema, m, deriv, scale_by));
}

UnaryTerm simple(Schema schema, Rational coeff, int lam, int mu, DerivOrder deriv) {
    UnaryTerm t{std::move(coeff), schema, ScalarExponents{lam, 0, 0}, {}, deriv};
    if (mu > 0) t.factors[FactorSymbol::mu()] = mu;
    return t;
}

}  // namespace

MultiplierSplit split_multiplier(const Conjugation& conj, const WeightModel& model) {
    if (conj.schema != model.schema()) throw SchemaError("conjugation schema mismatch");
    MultiplierSplit split;
    split.schema = conj.schema;
    split.omitted_ell_t = conj.omitted_ell_t;
    const Schema sc = conj.schema;

    const bool second_order =
        !conj.omitted_ell_t &&
        std::none_of(conj.expansion.begin(), conj.expansion.end(),
                     [](const UnaryTerm& t) { return t.deriv.x > 2 || t.deriv.t > 0; });
    const bool has_wt = std::any_of(conj.expansion.begin(), conj.expansion.end(),
                                    [](const UnaryTerm& t) { return t.deriv.t > 0; });

    if (sc == Schema::Poly && second_order) {
        // I1 = -2 lam mu v_x; I2 = v_xx + lam^2 mu^2 v - 2 lam v (pv is out of scope)
        split.i1 = {simple(sc, -2, 1, 1, {0, 1})};
        split.i2 = {simple(sc, 1, 0, 0, {0, 2}), simple(sc, 1, 2, 2, {0, 0}),
                    simple(sc, -2, 1, 0, {0, 0})};
    } else if (sc == Schema::Poly) {
        if (has_wt)
            split.i1.push_back(UnaryTerm{Rational(1), sc, ScalarExponents{0, 0, 1}, {}, {1, 0}});
        split.i1.push_back(simple(sc, -4, 1, 1, {0, 3}));
        split.i1.push_back(simple(sc, -4, 3, 3, {0, 1}));
        split.i1.push_back(simple(sc, -12, 3, 2, {0, 0}));
        split.i2 = {simple(sc, 1, 0, 0, {0, 4}), simple(sc, 6, 2, 2, {0, 2}),
                    simple(sc, 1, 4, 4, {0, 0}), simple(sc, 12, 2, 0, {0, 0})};
        split.i3 = {simple(sc, -12, 1, 0, {0, 2}), simple(sc, 24, 2, 1, {0, 1})};
    } else {
        auto rho = [](Rational c, int lam, int x1, int x2, int x3) {
            return expand_rho_powers({RhoMonomial{std::move(c), lam, x1, x2, x3}});
        };
        // J1 = gamma u_t - 4 lam rho_x u_xxx - 4 lam^3 rho_x^3 u_x - 6 lam^3 rho_x^2 rho_xx u
        if (has_wt)
            split.i1.push_back(UnaryTerm{Rational(1), sc, ScalarExponents{0, 0, 1}, {}, {1, 0}});
        push(split.i1, sc, rho(-4, 1, 1, 0, 0), 1, {0, 3});
        push(split.i1, sc, rho(-4, 3, 3, 0, 0), 1, {0, 1});
        push(split.i1, sc, rho(-6, 3, 2, 1, 0), 1, {0, 0});
        // J2 = u_xxxx + 6 lam^2 rho_x^2 u_xx + lam^4 rho_x^4 u + (3 lam^2 rho_xx^2 + 4 lam^2 rho_x rho_xxx) u
        split.i2 = {UnaryTerm{Rational(1), sc, {}, {}, {0, 4}}};
        push(split.i2, sc, rho(6, 2, 2, 0, 0), 1, {0, 2});
        push(split.i2, sc, rho(1, 4, 4, 0, 0), 1, {0, 0});
        push(split.i2, sc, rho(3, 2, 0, 2, 0), 1, {0, 0});
        push(split.i2, sc, rho(4, 2, 1, 0, 1), 1, {0, 0});
        // J3 = -6 lam rho_xx u_xx + (12 lam^2 rho_x rho_xx - 4 lam rho_xxx) u_x
        push(split.i3, sc, rho(-6, 1, 0, 1, 0), 1, {0, 2});
        push(split.i3, sc, rho(12, 2, 1, 1, 0), 1, {0, 1});
        push(split.i3, sc, rho(-4, 1, 0, 0, 1), 1, {0, 1});
        split.i1 = merge_unary(std::move(split.i1));
        split.i2 = merge_unary(std::move(split.i2));
        split.i3 = merge_unary(std::move(split.i3));
    }

    // residual = expansion - (i1 + i2 + i3); must be zeroth order
    UnaryList residual = conj.expansion;
    for (const UnaryList* g : {&split.i1, &split.i2, &split.i3})
        for (UnaryTerm t : *g) {
            t.coeff = -t.coeff;
            residual.push_back(std::move(t));
        }
    residual = merge_unary(std::move(residual));
    for (const auto& t : residual)
        if (t.deriv.t != 0 || t.deriv.x != 0)
            throw ContractError("multiplier grouping does not cover the expansion");
    split.residual = std::move(residual);
    return split;
}

TermList multiply(const UnaryList& left, const UnaryList& right, bool skip_diagonal) {
    TermList out;
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (skip_diagonal && i == j) continue;
            const auto& a = left[i];
            const auto& b = right[j];
            if (a.schema != b.schema) throw SchemaError("mixed schemas in multiply");
            Term t;
            t.schema = a.schema;
            t.coeff = a.coeff * b.coeff;
            t.scalars = {a.scalars.lam + b.scalars.lam, a.scalars.s + b.scalars.s,
                         a.scalars.gamma + b.scalars.gamma};
            t.factors = a.factors;
            for (const auto& [sym, e] : b.factors) t.factors[sym] += e;
            t.bilinear.first = a.deriv;
            t.bilinear.second = b.deriv;
            out.push_back(canonicalize(std::move(t)));
        }
    }
    return merge(std::move(out));
}

}  // namespace carleman
