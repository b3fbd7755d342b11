#include "carleman/term.hpp"

#include <algorithm>
#include <cctype>

namespace carleman {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw ParseError("malformed rational '" + text + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw ParseError("malformed rational '" + text + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d <= 0) throw ParseError("denominator must be positive in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string format_rational(const Rational& r) {
    return r.str();
}

Rational rational_pow(const Rational& r, int n) {
    if (n < 0) throw ContractError("negative power");
    Rational out = 1;
    for (int i = 0; i < n; ++i) out *= r;
    return out;
}

std::string_view schema_name(Schema s) {
    return s == Schema::Poly ? "poly" : "exp";
}

std::optional<Schema> schema_from_name(std::string_view name) {
    if (name == "poly") return Schema::Poly;
    if (name == "exp") return Schema::Exp;
    return std::nullopt;
}

FactorSymbol FactorSymbol::phi_deriv(int k) {
    if (k < 1) throw SchemaError("phi derivative order must be >= 1");
    return {Kind::PhiDeriv, k};
}

bool FactorSymbol::belongs_to(Schema s) const {
    return (kind == Kind::Mu) == (s == Schema::Poly);
}

std::string FactorSymbol::token() const {
    switch (kind) {
        case Kind::Mu: return "mu";
        case Kind::PhiDeriv: return "phi(" + std::to_string(order) + ")";
        case Kind::VPhi: return "vphi";
        case Kind::VPhiT: return "vphi_t";
        case Kind::VPhiTT: return "vphi_tt";
    }
    return "?";
}

std::string FactorSymbol::latex() const {
    switch (kind) {
        case Kind::Mu: return "\\mu";
        case Kind::PhiDeriv:
            if (order <= 4) return "\\phi_{" + std::string(static_cast<std::size_t>(order), 'x') + "}";
            return "\\phi_{x^{" + std::to_string(order) + "}}";
        case Kind::VPhi: return "\\varphi";
        case Kind::VPhiT: return "\\varphi_t";
        case Kind::VPhiTT: return "\\varphi_{tt}";
    }
    return "?";
}

std::optional<FactorSymbol> FactorSymbol::from_token(std::string_view tok) {
    if (tok == "mu") return mu();
    if (tok == "vphi") return vphi();
    if (tok == "vphi_t") return vphi_t();
    if (tok == "vphi_tt") return vphi_tt();
    if (tok.starts_with("phi(") && tok.ends_with(")")) {
        std::string digits(tok.substr(4, tok.size() - 5));
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            return std::nullopt;
        int k = std::stoi(digits);
        if (k < 1) return std::nullopt;
        return phi_deriv(k);
    }
    return std::nullopt;
}

Term canonicalize(Term term) {
    for (auto it = term.factors.begin(); it != term.factors.end();) {
        if (it->second == 0) {
            it = term.factors.erase(it);
            continue;
        }
        if (it->second < 0) throw SchemaError("negative factor exponent");
        if (!it->first.belongs_to(term.schema))
            throw SchemaError("symbol '" + it->first.token() + "' not in schema " +
                              std::string(schema_name(term.schema)));
        ++it;
    }
    if (term.scalars.lam < 0 || term.scalars.s < 0 || term.scalars.gamma < 0)
        throw SchemaError("negative scalar exponent");
    if (term.schema == Schema::Poly && term.scalars.s != 0)
        throw SchemaError("s exponent must be zero in the poly schema");
    if (term.bilinear.second.t != 0) {
        if (term.bilinear.first.t != 0)
            throw SchemaError("both bilinear slots carry a t-order");
        std::swap(term.bilinear.first, term.bilinear.second);
    }
    if (term.bilinear.first.t == 0 && term.bilinear.first.x > term.bilinear.second.x)
        std::swap(term.bilinear.first, term.bilinear.second);
    return term;
}

bool same_key(const Term& a, const Term& b) {
    return a.schema == b.schema && a.scalars == b.scalars && a.factors == b.factors &&
           a.bilinear == b.bilinear && a.flags == b.flags;
}

namespace {

std::strong_ordering cmp_factors(const FactorExponents& a, const FactorExponents& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        // walk the union of symbols in id order, missing exponent = 0
        FactorSymbol sym;
        if (ia == a.end()) sym = ib->first;
        else if (ib == b.end()) sym = ia->first;
        else sym = std::min(ia->first, ib->first);
        int ea = (ia != a.end() && ia->first == sym) ? ia->second : 0;
        int eb = (ib != b.end() && ib->first == sym) ? ib->second : 0;
        if (ea != eb) return eb <=> ea;  // higher exponent first
        if (ia != a.end() && ia->first == sym) ++ia;
        if (ib != b.end() && ib->first == sym) ++ib;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering term_order(const Term& a, const Term& b) {
    if (auto c = b.flags.d_x <=> a.flags.d_x; c != 0) return c;
    if (auto c = b.flags.d_t <=> a.flags.d_t; c != 0) return c;
    if (auto c = b.bilinear.second.x <=> a.bilinear.second.x; c != 0) return c;
    if (auto c = b.bilinear.first <=> a.bilinear.first; c != 0) return c;
    if (auto c = b.scalars.lam <=> a.scalars.lam; c != 0) return c;
    if (auto c = b.scalars.s <=> a.scalars.s; c != 0) return c;
    if (auto c = b.scalars.gamma <=> a.scalars.gamma; c != 0) return c;
    if (auto c = cmp_factors(a.factors, b.factors); c != 0) return c;
    if (a.coeff < b.coeff) return std::strong_ordering::less;
    if (b.coeff < a.coeff) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool term_less(const Term& a, const Term& b) {
    return term_order(a, b) == std::strong_ordering::less;
}

void sort_terms(TermList& list) {
    std::stable_sort(list.begin(), list.end(), term_less);
}

TermList merge(TermList list) {
    if (list.empty()) return list;
    Schema schema = list.front().schema;
    for (auto& t : list) {
        if (t.schema != schema) throw SchemaError("mixed schemas in merge");
        t = canonicalize(std::move(t));
    }
    sort_terms(list);
    TermList out;
    for (auto& t : list) {
        if (!out.empty() && same_key(out.back(), t)) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    sort_terms(out);
    return out;
}

TermList merged_sum(TermList list, const TermList& extra) {
    list.insert(list.end(), extra.begin(), extra.end());
    return merge(std::move(list));
}

TermList merged_difference(const TermList& a, const TermList& b) {
    TermList work = a;
    for (Term t : b) {
        t.coeff = -t.coeff;
        work.push_back(std::move(t));
    }
    return merge(std::move(work));
}

UnaryList merge_unary(UnaryList list) {
    if (list.empty()) return list;
    Schema schema = list.front().schema;
    for (auto& t : list) {
        if (t.schema != schema) throw SchemaError("mixed schemas in merge_unary");
        std::erase_if(t.factors, [](const auto& kv) { return kv.second == 0; });
    }
    auto key_less = [](const UnaryTerm& a, const UnaryTerm& b) {
        return std::tie(a.deriv, a.scalars, a.factors) < std::tie(b.deriv, b.scalars, b.factors);
    };
    std::stable_sort(list.begin(), list.end(), key_less);
    UnaryList out;
    for (auto& t : list) {
        if (!out.empty() && out.back().deriv == t.deriv && out.back().scalars == t.scalars &&
            out.back().factors == t.factors) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const UnaryTerm& t) { return t.coeff == 0; });
    return out;
}

Term scale(Term t, const Rational& c) {
    t.coeff *= c;
    return t;
}

TermList scale(TermList list, const Rational& c) {
    for (auto& t : list) t.coeff *= c;
    return list;
}

TermList substitute_gamma_one(TermList list) {
    for (auto& t : list) t.scalars.gamma = 0;
    return merge(std::move(list));
}

UnaryList substitute_gamma_one(UnaryList list) {
    for (auto& t : list) t.scalars.gamma = 0;
    return merge_unary(std::move(list));
}

int total_factor_degree(const FactorExponents& f) {
    int deg = 0;
    for (const auto& [sym, e] : f) deg += e;
    return deg;
}

}  // namespace carleman
