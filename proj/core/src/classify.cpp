#include "carleman/classify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "carleman/codec.hpp"
#include "carleman/engine.hpp"

namespace carleman {

std::string_view bc_name(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::None: return "none";
        case BoundaryCondition::Clamped: return "clamped";
        case BoundaryCondition::Hinged: return "hinged";
    }
    return "?";
}

std::optional<BoundaryCondition> bc_from_name(std::string_view name) {
    if (name == "none") return BoundaryCondition::None;
    if (name == "clamped") return BoundaryCondition::Clamped;
    if (name == "hinged") return BoundaryCondition::Hinged;
    return std::nullopt;
}

Grade grade_of(const Term& term) {
    return {term.scalars.lam + term.scalars.s, term.scalars.lam,
            total_factor_degree(term.factors)};
}

GradedGroup grade_group(TermList rows) {
    GradedGroup g;
    g.rows = merge(std::move(rows));
    if (g.rows.empty()) return g;
    std::vector<Grade> grades;
    for (const auto& t : g.rows) grades.push_back(grade_of(t));
    Grade top = *std::max_element(grades.begin(), grades.end());
    std::optional<Grade> second;
    for (const auto& gr : grades)
        if (gr < top && (!second || gr > *second)) second = gr;
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
        if (grades[i] == top) g.leading.push_back(g.rows[i]);
        else if (second && grades[i] == *second) g.subleading.push_back(g.rows[i]);
        else g.rest.push_back(g.rows[i]);
    }
    return g;
}

namespace {

// bc filter on x-orders only; t-derivatives vanish wherever the function does
bool bc_deletes(const Term& t, BoundaryCondition bc) {
    if (bc == BoundaryCondition::None) return false;
    auto hit = [&](int x_order) {
        if (bc == BoundaryCondition::Clamped) return x_order == 0 || x_order == 1;
        return x_order == 0 || x_order == 2;  // hinged
    };
    return hit(t.bilinear.first.x) || hit(t.bilinear.second.x);
}

}  // namespace

Report classify(const TermList& list, BoundaryCondition bc, bool drop_time_boundary) {
    Report rep;
    if (!list.empty()) rep.schema = list.front().schema;
    rep.bc = bc;
    rep.time_boundary_dropped = drop_time_boundary;

    std::map<BilinearPart, TermList> boundary_rows;
    std::map<int, TermList> energy_rows;
    TermList cross_rows, cross_other_rows, time_rows, deleted_rows;

    for (const Term& raw : list) {
        Term t = canonicalize(raw);
        if (!is_terminal(t)) throw ContractError("classify expects terminal rows");
        if (t.coeff == 0) continue;
        if (t.flags.d_t == 1) {
            time_rows.push_back(std::move(t));
        } else if (t.flags.d_x == 1) {
            if (bc_deletes(t, bc)) deleted_rows.push_back(std::move(t));
            else boundary_rows[t.bilinear].push_back(std::move(t));
        } else if (t.bilinear.first.t == 0) {
            // diagonal energy shape (w_{x^k})^2
            energy_rows[t.bilinear.first.x].push_back(std::move(t));
        } else if (t.bilinear.first == DerivOrder{1, 0} && t.bilinear.second == DerivOrder{0, 1}) {
            cross_rows.push_back(std::move(t));
        } else {
            cross_other_rows.push_back(std::move(t));
        }
    }

    rep.time_boundary = merge(std::move(time_rows));
    rep.boundary_deleted = merge(std::move(deleted_rows));
    for (auto& [shape, rows] : boundary_rows) {
        auto merged = merge(std::move(rows));
        if (merged.empty()) continue;
        rep.space_boundary[shape] = grade_group(std::move(merged));
    }
    for (auto& [order, rows] : energy_rows) {
        auto merged = merge(std::move(rows));
        if (merged.empty()) continue;
        rep.energy[order] = grade_group(std::move(merged));
    }
    rep.cross = merge(std::move(cross_rows));
    rep.cross_other = merge(std::move(cross_other_rows));
    return rep;
}

TermList Report::all_space_boundary() const {
    TermList out;
    for (const auto& [shape, g] : space_boundary)
        out.insert(out.end(), g.rows.begin(), g.rows.end());
    return merge(std::move(out));
}

TermList Report::all_input() const {
    TermList out = time_boundary;
    for (const auto& [shape, g] : space_boundary)
        out.insert(out.end(), g.rows.begin(), g.rows.end());
    out.insert(out.end(), boundary_deleted.begin(), boundary_deleted.end());
    for (const auto& [order, g] : energy)
        out.insert(out.end(), g.rows.begin(), g.rows.end());
    out.insert(out.end(), cross.begin(), cross.end());
    out.insert(out.end(), cross_other.begin(), cross_other.end());
    return merge(std::move(out));
}

std::vector<WeightMonomial> cross_summary(const TermList& cross) {
    std::vector<WeightMonomial> out;
    for (const Term& t : cross) {
        if (!(t.bilinear.first == DerivOrder{1, 0} && t.bilinear.second == DerivOrder{0, 1} &&
              t.flags.d_t == 0 && t.flags.d_x == 0))
            throw ContractError("cross_summary expects u_t u_x rows");
        out.push_back(WeightMonomial{t.coeff, t.scalars, t.factors});
    }
    return merge_weight_monomials(std::move(out));
}

SignContext SignContext::defaults(Schema schema) {
    SignContext ctx;
    if (schema == Schema::Poly) {
        ctx.assumptions[FactorSymbol::mu()] = Sign::Negative;  // x0 > L on (0,L)
    } else {
        ctx.assumptions[FactorSymbol::vphi()] = Sign::Positive;
    }
    return ctx;
}

Sign SignContext::of(const FactorSymbol& sym) const {
    auto it = assumptions.find(sym);
    return it == assumptions.end() ? Sign::Indefinite : it->second;
}

std::vector<std::pair<Term, Sign>> sign_report(const TermList& leading, const SignContext& ctx) {
    std::vector<std::pair<Term, Sign>> out;
    for (const Term& t : leading) {
        Sign verdict = t.coeff > 0 ? Sign::Positive : Sign::Negative;
        for (const auto& [sym, e] : t.factors) {
            if (e % 2 == 0) continue;
            Sign s = ctx.of(sym);
            if (s == Sign::Indefinite) {
                verdict = Sign::Indefinite;
                break;
            }
            if (s == Sign::Negative)
                verdict = verdict == Sign::Positive ? Sign::Negative : Sign::Positive;
        }
        out.emplace_back(t, verdict);
    }
    return out;
}

namespace {

std::string latex_pow(const std::string& base, int e) {
    if (e == 0) return {};
    if (e == 1) return base;
    return base + "^{" + std::to_string(e) + "}";
}

std::string latex_deriv(Schema schema, const DerivOrder& d) {
    std::string fn = schema == Schema::Poly ? "w" : "u";
    if (d.t == 0 && d.x == 0) return fn;
    std::string sub;
    if (d.t > 0) sub += (d.t == 1 ? std::string("t") : "t^{" + std::to_string(d.t) + "}");
    if (d.x > 0) sub += (d.x <= 4 ? std::string(static_cast<std::size_t>(d.x), 'x')
                                  : "x^{" + std::to_string(d.x) + "}");
    if (sub.size() == 1) return fn + "_" + sub;
    return fn + "_{" + sub + "}";
}

std::string latex_weight(const ScalarExponents& sc, const FactorExponents& f) {
    std::string out;
    auto app = [&](std::string piece) {
        if (piece.empty()) return;
        // keep a bare macro from swallowing a following letter (\lambda s)
        if (!out.empty() && std::isalpha(static_cast<unsigned char>(out.back())) &&
            piece[0] != '\\')
            out += ' ';
        out += piece;
    };
    app(latex_pow("\\gamma", sc.gamma));
    app(latex_pow("\\lambda", sc.lam));
    app(latex_pow("s", sc.s));
    for (const auto& [sym, e] : f) app(latex_pow(sym.latex(), e));
    return out;
}

}  // namespace

std::string latex_term(const Term& term) {
    std::string body = latex_weight(term.scalars, term.factors);
    const auto& b = term.bilinear;
    if (b.first == b.second) {
        body += " " + latex_deriv(term.schema, b.first) + "^{2}";
    } else {
        body += " " + latex_deriv(term.schema, b.first) + " " + latex_deriv(term.schema, b.second);
    }
    std::string coeff = format_rational(term.coeff);
    if (term.flags.d_t == 1) return coeff + "(" + body + ")_{t}";
    if (term.flags.d_x == 1) return coeff + "(" + body + ")_{x}";
    return coeff + body;
}

std::string latex_weight_monomial(const WeightMonomial& m) {
    return format_rational(m.coeff) + latex_weight(m.scalars, m.factors);
}

namespace {

void latex_sum(std::ostream& out, const TermList& rows) {
    if (rows.empty()) {
        out << "0";
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string s = latex_term(rows[i]);
        if (i > 0 && !s.empty() && s[0] != '-') out << "+";
        out << s;
    }
}

void table_rows(std::ostream& out, const TermList& rows) {
    for (const auto& t : rows) {
        std::string row;
        try {
            row = emit_row(t, RowFormat::Fixed);
        } catch (const Error&) {
            row = emit_row(t, RowFormat::Sparse);
        }
        out << row << "\n";
    }
}

}  // namespace

std::string emit_latex(const Report& report) {
    std::ostringstream out;
    out << "% schema=" << schema_name(report.schema) << "\n";
    out << "\\paragraph{Time boundary"
        << (report.time_boundary_dropped ? " (dropped)" : "") << "}\n$";
    latex_sum(out, report.time_boundary);
    out << "$\n";
    out << "\\paragraph{Space boundary}\n$";
    latex_sum(out, report.all_space_boundary());
    out << "$\n";
    for (const auto& [order, g] : report.energy) {
        out << "\\paragraph{Energy, order " << order << "}\n$";
        latex_sum(out, g.rows);
        out << "$\n";
    }
    out << "\\paragraph{Cross}\n$";
    latex_sum(out, report.cross);
    out << "$\n";
    if (!report.cross_other.empty()) {
        out << "\\paragraph{Cross (other shapes)}\n$";
        latex_sum(out, report.cross_other);
        out << "$\n";
    }
    return out.str();
}

std::string emit_table(const Report& report) {
    std::ostringstream out;
    out << "# schema=" << schema_name(report.schema) << " format=fixed\n";
    out << "## time-boundary" << (report.time_boundary_dropped ? " (dropped)" : "") << "\n";
    table_rows(out, report.time_boundary);
    out << "## space-boundary\n";
    for (const auto& [shape, g] : report.space_boundary) {
        out << "## shape (" << shape.first.t << "," << shape.first.x << ")("
            << shape.second.t << "," << shape.second.x << ")\n";
        out << "## leading\n";
        table_rows(out, g.leading);
        out << "## subleading\n";
        table_rows(out, g.subleading);
        out << "## rest\n";
        table_rows(out, g.rest);
    }
    if (!report.boundary_deleted.empty()) {
        out << "## boundary-deleted (" << bc_name(report.bc) << ")\n";
        table_rows(out, report.boundary_deleted);
    }
    for (const auto& [order, g] : report.energy) {
        out << "## energy order " << order << "\n";
        out << "## leading\n";
        table_rows(out, g.leading);
        out << "## subleading\n";
        table_rows(out, g.subleading);
        out << "## rest\n";
        table_rows(out, g.rest);
    }
    out << "## cross\n";
    table_rows(out, report.cross);
    if (!report.cross_other.empty()) {
        out << "## cross-other\n";
        table_rows(out, report.cross_other);
    }
    return out.str();
}

}  // namespace carleman
