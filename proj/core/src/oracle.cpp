#include "carleman/oracle.hpp"

#include <cmath>

namespace carleman {

Poly2 Poly2::constant(Rational c) {
    Poly2 p;
    p.add_monomial(0, 0, std::move(c));
    return p;
}

Poly2 Poly2::variable_t() {
    Poly2 p;
    p.add_monomial(1, 0, 1);
    return p;
}

Poly2 Poly2::variable_x() {
    Poly2 p;
    p.add_monomial(0, 1, 1);
    return p;
}

void Poly2::add_monomial(int t_deg, int x_deg, Rational c) {
    coeffs_[{t_deg, x_deg}] += std::move(c);
    prune();
}

void Poly2::prune() {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.coeffs_) out.coeffs_[k] += c;
    out.prune();
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.coeffs_) out.coeffs_[k] -= c;
    out.prune();
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_)
            out.coeffs_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    out.prune();
    return out;
}

Poly2 Poly2::diff(int t_times, int x_times) const {
    Poly2 out = *this;
    for (int i = 0; i < t_times; ++i) {
        Poly2 next;
        for (const auto& [k, c] : out.coeffs_)
            if (k.first > 0) next.coeffs_[{k.first - 1, k.second}] += c * k.first;
        out = std::move(next);
    }
    for (int i = 0; i < x_times; ++i) {
        Poly2 next;
        for (const auto& [k, c] : out.coeffs_)
            if (k.second > 0) next.coeffs_[{k.first, k.second - 1}] += c * k.second;
        out = std::move(next);
    }
    out.prune();
    return out;
}

Poly2 Poly2::pow(int n) const {
    Poly2 out = constant(1);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

Rational Poly2::eval(const Rational& t, const Rational& x) const {
    Rational sum = 0;
    for (const auto& [k, c] : coeffs_)
        sum += c * rational_pow(t, k.first) * rational_pow(x, k.second);
    return sum;
}

NumericConfig NumericConfig::poly_default() {
    NumericConfig cfg;
    Poly2 w;
    // rich enough that fourth x-derivatives and mixed tx-derivatives survive
    w.add_monomial(0, 0, 1);
    w.add_monomial(1, 0, 1);
    w.add_monomial(0, 1, 2);
    w.add_monomial(1, 1, 3);
    w.add_monomial(1, 2, 1);
    w.add_monomial(0, 3, 1);
    w.add_monomial(0, 4, 1);
    w.add_monomial(2, 2, Rational(1, 2));
    w.add_monomial(1, 4, Rational(1, 3));
    cfg.w = w;
    cfg.samples = {{Rational(1, 3), Rational(1, 2)},
                   {Rational(1, 2), Rational(1, 4)},
                   {Rational(3, 2), Rational(2, 3)},
                   {Rational(1, 5), Rational(4, 5)}};
    return cfg;
}

NumericConfig NumericConfig::exp_default() {
    NumericConfig cfg = poly_default();
    Poly2 phi;
    phi.add_monomial(0, 0, 2);
    phi.add_monomial(0, 1, 1);
    phi.add_monomial(0, 2, 1);
    cfg.phi = phi;
    cfg.s_val = Rational(3, 2);
    return cfg;
}

TermList expand_divergence(const Term& input, const WeightModel& model) {
    Term term = canonicalize(input);
    if (term.flags.d_t == 0 && term.flags.d_x == 0) return {term};
    const Direction d = term.flags.d_t == 1 ? Direction::T : Direction::X;
    Term base = term;
    base.flags = {};

    TermList out;
    // product rule: d(W) * uv + W * du * v + W * u * dv
    for (const auto& mono : diff_factor_product(base.factors, base.scalars, d, model)) {
        Term t = base;
        t.coeff = base.coeff * mono.coeff;
        t.scalars = mono.scalars;
        t.factors = mono.factors;
        out.push_back(canonicalize(std::move(t)));
    }
    Term du = base;
    if (d == Direction::T) du.bilinear.first.t += 1;
    else du.bilinear.first.x += 1;
    out.push_back(canonicalize(std::move(du)));
    Term dv = base;
    if (d == Direction::T) {
        // the second slot cannot hold a t-order; canonicalize swaps it forward
        dv.bilinear.second.t += 1;
    } else {
        dv.bilinear.second.x += 1;
    }
    out.push_back(canonicalize(std::move(dv)));
    return out;
}

TermList expand_divergence_all(const TermList& list, const WeightModel& model) {
    TermList out;
    for (const auto& t : list) {
        auto e = expand_divergence(t, model);
        out.insert(out.end(), e.begin(), e.end());
    }
    return merge(std::move(out));
}

IdentityCheck verify_identity(const TermList& input, const TermList& output,
                              const WeightModel& model) {
    IdentityCheck check;
    check.diff = merged_difference(expand_divergence_all(output, model),
                                   expand_divergence_all(input, model));
    check.ok = check.diff.empty();
    return check;
}

std::vector<Rational> numeric_eval_poly(const TermList& list, const NumericConfig& cfg) {
    Poly2 mu;
    mu.add_monomial(0, 1, 2);
    mu.add_monomial(0, 0, -2 * cfg.x0);

    Poly2 sum;
    for (const Term& raw : list) {
        Term t = canonicalize(raw);
        if (t.schema != Schema::Poly) throw SchemaError("numeric_eval_poly needs POLY rows");
        Rational scalar = t.coeff * rational_pow(cfg.lam_val, t.scalars.lam) *
                          rational_pow(cfg.gamma_val, t.scalars.gamma);
        Poly2 p = Poly2::constant(scalar);
        for (const auto& [sym, e] : t.factors) {
            if (sym != FactorSymbol::mu()) throw SchemaError("POLY factor must be mu");
            p = p * mu.pow(e);
        }
        p = p * cfg.w.diff(t.bilinear.first.t, t.bilinear.first.x);
        p = p * cfg.w.diff(t.bilinear.second.t, t.bilinear.second.x);
        if (t.flags.d_t == 1) p = p.diff(1, 0);
        if (t.flags.d_x == 1) p = p.diff(0, 1);
        sum = sum + p;
    }

    std::vector<Rational> out;
    for (const auto& [tv, xv] : cfg.samples) out.push_back(sum.eval(tv, xv));
    return out;
}

namespace {

// first-order dual number; d carries the derivative in the active variable
struct Dual {
    double v = 0, d = 0;
    Dual operator+(const Dual& o) const { return {v + o.v, d + o.d}; }
    Dual operator-(const Dual& o) const { return {v - o.v, d - o.d}; }
    Dual operator*(const Dual& o) const { return {v * o.v, v * o.d + d * o.v}; }
    Dual operator/(const Dual& o) const {
        return {v / o.v, (d * o.v - v * o.d) / (o.v * o.v)};
    }
};

Dual constant(double c) { return {c, 0}; }
Dual dexp(const Dual& a) { return {std::exp(a.v), std::exp(a.v) * a.d}; }

Dual dpow(Dual a, int n) {
    Dual out = constant(1);
    for (int i = 0; i < n; ++i) out = out * a;
    return out;
}

Dual eval_poly(const Poly2& p, const Dual& t, const Dual& x) {
    Dual sum = constant(0);
    p.for_each([&](int td, int xd, const Rational& c) {
        sum = sum + constant(static_cast<double>(c)) * dpow(t, td) * dpow(x, xd);
    });
    return sum;
}

// one EXP term at dual (t, x); the flag direction picks which variable is active
Dual eval_exp_term(const Term& t, const NumericConfig& cfg, const Dual& tv, const Dual& xv) {
    const double s = static_cast<double>(cfg.s_val);
    const double T = static_cast<double>(cfg.T);

    Dual u = tv * (constant(T) - tv);  // t(T - t)
    if (std::abs(u.v) < 1e-12) throw Error("numeric_eval_exp sample hits t(T-t)=0");
    Dual up = constant(T) - constant(2) * tv;
    Dual g = constant(1) / u;
    Dual gp = constant(0) - up / (u * u);
    Dual gpp = constant(2) / (u * u) + constant(2) * up * up / (u * u * u);
    Dual es = dexp(constant(s) * eval_poly(cfg.phi, constant(0), xv));

    double scalar = static_cast<double>(t.coeff) *
                    std::pow(static_cast<double>(cfg.lam_val), t.scalars.lam) *
                    std::pow(s, t.scalars.s) *
                    std::pow(static_cast<double>(cfg.gamma_val), t.scalars.gamma);
    Dual prod = constant(scalar);
    for (const auto& [sym, e] : t.factors) {
        Dual f;
        switch (sym.kind) {
            case FactorSymbol::Kind::PhiDeriv:
                f = eval_poly(cfg.phi.diff(0, sym.order), constant(0), xv);
                break;
            case FactorSymbol::Kind::VPhi: f = es * g; break;
            case FactorSymbol::Kind::VPhiT: f = es * gp; break;
            case FactorSymbol::Kind::VPhiTT: f = es * gpp; break;
            default: throw SchemaError("mu in EXP numeric evaluation");
        }
        prod = prod * dpow(f, e);
    }
    prod = prod * eval_poly(cfg.w.diff(t.bilinear.first.t, t.bilinear.first.x), tv, xv);
    prod = prod * eval_poly(cfg.w.diff(t.bilinear.second.t, t.bilinear.second.x), tv, xv);
    return prod;
}

}  // namespace

std::vector<double> numeric_eval_exp(const TermList& list, const NumericConfig& cfg) {
    std::vector<double> out;
    for (const auto& [tq, xq] : cfg.samples) {
        const double tval = static_cast<double>(tq);
        const double xval = static_cast<double>(xq);
        double sum = 0;
        for (const Term& raw : list) {
            Term t = canonicalize(raw);
            if (t.schema != Schema::Exp) throw SchemaError("numeric_eval_exp needs EXP rows");
            Dual td{tval, t.flags.d_t == 1 ? 1.0 : 0.0};
            Dual xd{xval, t.flags.d_x == 1 ? 1.0 : 0.0};
            Dual val = eval_exp_term(t, cfg, td, xd);
            sum += (t.flags.d_t == 1 || t.flags.d_x == 1) ? val.d : val.v;
        }
        out.push_back(sum);
    }
    return out;
}

}  // namespace carleman
