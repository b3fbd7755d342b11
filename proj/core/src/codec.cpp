#include "carleman/codec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace carleman {

std::string_view format_name(RowFormat f) {
    return f == RowFormat::Fixed ? "fixed" : "sparse";
}

std::optional<RowFormat> format_from_name(std::string_view name) {
    if (name == "fixed") return RowFormat::Fixed;
    if (name == "sparse") return RowFormat::Sparse;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int parse_nonneg(const std::string& field, int line_no) {
    if (field.empty()) throw ParseError("empty integer field", line_no);
    for (char c : field)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected nonnegative integer, got '" + field + "'", line_no);
    return std::stoi(field);
}

// "(a,b)" -> {a, b}
DerivOrder parse_pair(const std::string& s, int line_no) {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected '(a,b)', got '" + s + "'", line_no);
    auto inner = split(s.substr(1, s.size() - 2), ',');
    if (inner.size() != 2) throw ParseError("expected '(a,b)', got '" + s + "'", line_no);
    return {parse_nonneg(inner[0], line_no), parse_nonneg(inner[1], line_no)};
}

Term parse_fixed(const std::string& line, Schema schema, int line_no) {
    auto fields = split(line, ',');
    std::size_t want = schema == Schema::Poly ? 8 : 14;
    if (fields.size() != want)
        throw ParseError("expected " + std::to_string(want) + " fields, got " +
                             std::to_string(fields.size()),
                         line_no);
    Term t;
    t.schema = schema;
    try {
        t.coeff = parse_rational(fields[0]);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
    }
    if (schema == Schema::Poly) {
        t.scalars.lam = parse_nonneg(fields[1], line_no);
        if (int m = parse_nonneg(fields[2], line_no); m > 0) t.factors[FactorSymbol::mu()] = m;
        t.bilinear.first = {parse_nonneg(fields[3], line_no), parse_nonneg(fields[4], line_no)};
        t.bilinear.second = {0, parse_nonneg(fields[5], line_no)};
        t.flags = {parse_nonneg(fields[6], line_no), parse_nonneg(fields[7], line_no)};
    } else {
        t.scalars.lam = parse_nonneg(fields[1], line_no);
        t.scalars.s = parse_nonneg(fields[2], line_no);
        for (int k = 1; k <= 4; ++k)
            if (int e = parse_nonneg(fields[2 + static_cast<std::size_t>(k)], line_no); e > 0)
                t.factors[FactorSymbol::phi_deriv(k)] = e;
        if (int e = parse_nonneg(fields[7], line_no); e > 0) t.factors[FactorSymbol::vphi()] = e;
        if (int e = parse_nonneg(fields[8], line_no); e > 0) t.factors[FactorSymbol::vphi_t()] = e;
        t.bilinear.first = {parse_nonneg(fields[9], line_no), parse_nonneg(fields[10], line_no)};
        t.bilinear.second = {0, parse_nonneg(fields[11], line_no)};
        t.flags = {parse_nonneg(fields[12], line_no), parse_nonneg(fields[13], line_no)};
    }
    if (t.flags.d_t > 1 || t.flags.d_x > 1)
        throw ParseError("divergence flags must be 0 or 1", line_no);
    try {
        return canonicalize(std::move(t));
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
    }
}

void parse_scalar_field(const std::string& field, ScalarExponents& sc, int line_no) {
    if (field == "1" || field.empty()) return;
    std::istringstream in(field);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int e = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            e = parse_nonneg(tok.substr(caret + 1), line_no);
        }
        if (name == "lam") sc.lam += e;
        else if (name == "s") sc.s += e;
        else if (name == "gamma") sc.gamma += e;
        else throw ParseError("unknown scalar '" + name + "'", line_no);
    }
}

void parse_factor_field(const std::string& field, FactorExponents& f, int line_no) {
    if (field == "1" || field.empty()) return;
    std::istringstream in(field);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int e = 1;
        if (auto caret = tok.rfind('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            e = parse_nonneg(tok.substr(caret + 1), line_no);
        }
        auto sym = FactorSymbol::from_token(name);
        if (!sym) throw ParseError("unknown symbol '" + name + "'", line_no);
        f[*sym] += e;
    }
}

Term parse_sparse(const std::string& line, Schema schema, int line_no) {
    auto fields = split(line, ';');
    if (fields.size() != 5) throw ParseError("expected 5 ';'-separated fields", line_no);
    Term t;
    t.schema = schema;
    try {
        t.coeff = parse_rational(fields[0]);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
    }
    parse_scalar_field(fields[1], t.scalars, line_no);
    parse_factor_field(fields[2], t.factors, line_no);
    auto& bi = fields[3];
    auto mid = bi.find(")(");
    if (mid == std::string::npos) throw ParseError("expected '(bt,bx)(ct,cx)'", line_no);
    t.bilinear.first = parse_pair(trim(bi.substr(0, mid + 1)), line_no);
    t.bilinear.second = parse_pair(trim(bi.substr(mid + 1)), line_no);
    DerivOrder flags = parse_pair(fields[4], line_no);
    t.flags = {flags.t, flags.x};
    if (t.flags.d_t > 1 || t.flags.d_x > 1)
        throw ParseError("divergence flags must be 0 or 1", line_no);
    try {
        return canonicalize(std::move(t));
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
    }
}

std::string scalar_field(const ScalarExponents& sc) {
    std::string out;
    auto app = [&](const char* name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    app("lam", sc.lam);
    app("s", sc.s);
    app("gamma", sc.gamma);
    return out.empty() ? "1" : out;
}

std::string factor_field(const FactorExponents& f) {
    std::string out;
    for (const auto& [sym, e] : f) {
        if (!out.empty()) out += ' ';
        out += sym.token();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string emit_fixed(const Term& t) {
    if (t.scalars.gamma != 0)
        throw Error("gamma exponent has no fixed column; use the sparse format");
    std::vector<int> cols;
    if (t.schema == Schema::Poly) {
        int m = 0;
        for (const auto& [sym, e] : t.factors) {
            if (sym != FactorSymbol::mu()) throw SchemaError("non-mu factor in poly row");
            m = e;
        }
        cols = {t.scalars.lam, m, t.bilinear.first.t, t.bilinear.first.x,
                t.bilinear.second.x, t.flags.d_t, t.flags.d_x};
    } else {
        int phi[5] = {0, 0, 0, 0, 0};  // phi(1)..phi(4), vphi index 4 separate below
        int vphi = 0, vphi_t = 0;
        for (const auto& [sym, e] : t.factors) {
            if (sym.kind == FactorSymbol::Kind::PhiDeriv && sym.order <= 4) {
                phi[sym.order] = e;
            } else if (sym == FactorSymbol::vphi()) {
                vphi = e;
            } else if (sym == FactorSymbol::vphi_t()) {
                vphi_t = e;
            } else {
                throw Error("symbol '" + sym.token() +
                            "' has no fixed column; use the sparse format");
            }
        }
        cols = {t.scalars.lam, t.scalars.s, phi[1], phi[2], phi[3], phi[4], vphi, vphi_t,
                t.bilinear.first.t, t.bilinear.first.x, t.bilinear.second.x,
                t.flags.d_t, t.flags.d_x};
    }
    std::string out = format_rational(t.coeff);
    for (int c : cols) out += "," + std::to_string(c);
    return out;
}

std::string emit_sparse(const Term& t) {
    return format_rational(t.coeff) + "; " + scalar_field(t.scalars) + "; " +
           factor_field(t.factors) + "; " + pair_str(t.bilinear.first.t, t.bilinear.first.x) +
           pair_str(t.bilinear.second.t, t.bilinear.second.x) + "; " +
           pair_str(t.flags.d_t, t.flags.d_x);
}

}  // namespace

Term parse_row(const std::string& line, Schema schema, int line_no) {
    if (line.find(';') != std::string::npos) return parse_sparse(line, schema, line_no);
    return parse_fixed(line, schema, line_no);
}

std::string emit_row(const Term& term, RowFormat format) {
    return format == RowFormat::Fixed ? emit_fixed(term) : emit_sparse(term);
}

UnaryTerm parse_unary_row(const std::string& line, Schema schema, int line_no) {
    auto fields = split(line, ';');
    if (fields.size() != 5) throw ParseError("expected 5 ';'-separated fields", line_no);
    UnaryTerm t;
    t.schema = schema;
    try {
        t.coeff = parse_rational(fields[0]);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
    }
    parse_scalar_field(fields[1], t.scalars, line_no);
    parse_factor_field(fields[2], t.factors, line_no);
    t.deriv = parse_pair(fields[3], line_no);
    if (fields[4] != "-") throw ParseError("unary rows carry no flags; expected '-'", line_no);
    std::erase_if(t.factors, [](const auto& kv) { return kv.second == 0; });
    return t;
}

std::string emit_unary_row(const UnaryTerm& term) {
    return format_rational(term.coeff) + "; " + scalar_field(term.scalars) + "; " +
           factor_field(term.factors) + "; " + pair_str(term.deriv.t, term.deriv.x) + "; -";
}

TermFile read_term_file(std::istream& in, const std::string& name) {
    TermFile file;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty()) continue;
        if (body[0] == '#') {
            if (header_seen) continue;  // later comments
            std::istringstream hdr(body.substr(1));
            std::string tok;
            while (hdr >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "schema") {
                    auto s = schema_from_name(val);
                    if (!s) throw ParseError(name + ": unknown schema '" + val + "'", line_no);
                    file.schema = *s;
                } else if (key == "format") {
                    auto f = format_from_name(val);
                    if (!f) throw ParseError(name + ": unknown format '" + val + "'", line_no);
                    file.format = *f;
                } else if (key == "kind") {
                    file.unary = (val == "unary");
                }
            }
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw ParseError(name + ": missing '# schema=... format=...' header", line_no);
        if (file.unary)
            file.unary_terms.push_back(parse_unary_row(body, file.schema, line_no));
        else
            file.terms.push_back(parse_row(body, file.schema, line_no));
    }
    return file;
}

TermFile read_term_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_term_file(in, path);
}

void write_term_file(std::ostream& out, const TermFile& file) {
    out << "# schema=" << schema_name(file.schema) << " format=" << format_name(file.format);
    if (file.unary) out << " kind=unary";
    out << "\n";
    if (file.unary) {
        for (const auto& t : file.unary_terms) out << emit_unary_row(t) << "\n";
    } else {
        for (const auto& t : file.terms) out << emit_row(t, file.format) << "\n";
    }
}

void write_term_file_path(const std::string& path, const TermFile& file) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_term_file(out, file);
}

}  // namespace carleman
