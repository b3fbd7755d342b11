#include "carleman/weight_model.hpp"

#include <algorithm>

namespace carleman {

bool WeightModel::owns(const FactorSymbol& sym) const {
    return sym.belongs_to(schema_);
}

std::vector<WeightMonomial> WeightModel::diff_symbol(const FactorSymbol& sym, Direction d) const {
    if (!owns(sym))
        throw SchemaError("symbol '" + sym.token() + "' not in model " + name_);
    using K = FactorSymbol::Kind;
    switch (sym.kind) {
        case K::Mu:
            if (d == Direction::T) return {};
            return {WeightMonomial{Rational(2), {}, {}}};  // mu_x = 2
        case K::PhiDeriv:
            if (d == Direction::T) return {};
            return {WeightMonomial{Rational(1), {}, {{FactorSymbol::phi_deriv(sym.order + 1), 1}}}};
        case K::VPhi:
            if (d == Direction::T)
                return {WeightMonomial{Rational(1), {}, {{FactorSymbol::vphi_t(), 1}}}};
            return {WeightMonomial{Rational(1), ScalarExponents{0, 1, 0},
                                   {{FactorSymbol::phi_deriv(1), 1}, {FactorSymbol::vphi(), 1}}}};
        case K::VPhiT:
            if (d == Direction::T)
                return {WeightMonomial{Rational(1), {}, {{FactorSymbol::vphi_tt(), 1}}}};
            return {WeightMonomial{Rational(1), ScalarExponents{0, 1, 0},
                                   {{FactorSymbol::phi_deriv(1), 1}, {FactorSymbol::vphi_t(), 1}}}};
        case K::VPhiTT:
            throw SchemaError("vphi_tt is terminal and cannot be differentiated");
    }
    return {};
}

const WeightModel& WeightModel::poly_psi() {
    static const WeightModel m(Schema::Poly, "poly-psi");
    return m;
}

const WeightModel& WeightModel::exp_rho() {
    static const WeightModel m(Schema::Exp, "exp-rho");
    return m;
}

const WeightModel& WeightModel::for_schema(Schema s) {
    return s == Schema::Poly ? poly_psi() : exp_rho();
}

namespace {

WeightMonomial mul(const WeightMonomial& a, const WeightMonomial& b) {
    WeightMonomial out = a;
    out.coeff *= b.coeff;
    out.scalars.lam += b.scalars.lam;
    out.scalars.s += b.scalars.s;
    out.scalars.gamma += b.scalars.gamma;
    for (const auto& [sym, e] : b.factors) out.factors[sym] += e;
    std::erase_if(out.factors, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

std::vector<WeightMonomial> diff_factor_product(const FactorExponents& factors,
                                                const ScalarExponents& scalars,
                                                Direction direction,
                                                const WeightModel& model) {
    std::vector<WeightMonomial> out;
    for (const auto& [sym, e] : factors) {
        auto d = model.diff_symbol(sym, direction);
        for (const auto& rule : d) {
            // e * sym^{e-1} * d(sym) * (rest of the product)
            WeightMonomial mono{Rational(e), scalars, factors};
            mono.factors[sym] -= 1;
            mono = mul(mono, rule);
            out.push_back(std::move(mono));
        }
    }
    return merge_weight_monomials(std::move(out));
}

std::vector<WeightMonomial> merge_weight_monomials(std::vector<WeightMonomial> list) {
    for (auto& m : list)
        std::erase_if(m.factors, [](const auto& kv) { return kv.second == 0; });
    auto key_less = [](const WeightMonomial& a, const WeightMonomial& b) {
        return std::tie(a.scalars, a.factors) < std::tie(b.scalars, b.factors);
    };
    std::stable_sort(list.begin(), list.end(), key_less);
    std::vector<WeightMonomial> out;
    for (auto& m : list) {
        if (!out.empty() && out.back().scalars == m.scalars && out.back().factors == m.factors)
            out.back().coeff += m.coeff;
        else
            out.push_back(std::move(m));
    }
    std::erase_if(out, [](const WeightMonomial& m) { return m.coeff == 0; });
    return out;
}

std::vector<WeightMonomial> expand_rho_powers(const std::vector<RhoMonomial>& expr) {
    const auto p1 = FactorSymbol::phi_deriv(1);
    const auto p2 = FactorSymbol::phi_deriv(2);
    const auto p3 = FactorSymbol::phi_deriv(3);
    const auto vp = FactorSymbol::vphi();

    const std::vector<WeightMonomial> rho_x = {
        {Rational(1), ScalarExponents{0, 1, 0}, {{p1, 1}, {vp, 1}}}};
    const std::vector<WeightMonomial> rho_xx = {
        {Rational(1), ScalarExponents{0, 2, 0}, {{p1, 2}, {vp, 1}}},
        {Rational(1), ScalarExponents{0, 1, 0}, {{p2, 1}, {vp, 1}}}};
    const std::vector<WeightMonomial> rho_xxx = {
        {Rational(1), ScalarExponents{0, 3, 0}, {{p1, 3}, {vp, 1}}},
        {Rational(3), ScalarExponents{0, 2, 0}, {{p1, 1}, {p2, 1}, {vp, 1}}},
        {Rational(1), ScalarExponents{0, 1, 0}, {{p3, 1}, {vp, 1}}}};

    auto times = [](std::vector<WeightMonomial> acc, const std::vector<WeightMonomial>& f,
                    int power) {
        for (int i = 0; i < power; ++i) {
            std::vector<WeightMonomial> next;
            for (const auto& a : acc)
                for (const auto& b : f) next.push_back(mul(a, b));
            acc = std::move(next);
        }
        return acc;
    };

    std::vector<WeightMonomial> out;
    for (const auto& m : expr) {
        if (m.rho_xxxx != 0) throw SchemaError("rho_xxxx is not expandable");
        std::vector<WeightMonomial> acc = {
            {m.coeff, ScalarExponents{m.lam, 0, 0}, {}}};
        acc = times(std::move(acc), rho_x, m.rho_x);
        acc = times(std::move(acc), rho_xx, m.rho_xx);
        acc = times(std::move(acc), rho_xxx, m.rho_xxx);
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return merge_weight_monomials(std::move(out));
}

}  // namespace carleman
