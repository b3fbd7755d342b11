// carleman: command-line front end for the integration-by-parts engine.
//
// Exit codes: 0 success, 1 failed verification or golden check, 2 bad input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "carleman/classify.hpp"
#include "carleman/codec.hpp"
#include "carleman/conjugation.hpp"
#include "carleman/engine.hpp"
#include "carleman/oracle.hpp"
#include "carleman/presets.hpp"

using namespace carleman;

namespace {

Schema parse_schema(const std::string& name) {
    auto s = schema_from_name(name);
    if (!s) throw CLI::ValidationError("--schema", "expected poly or exp");
    return *s;
}

TermFile read_input(const std::string& path) {
    if (path == "-") return read_term_file(std::cin, "<stdin>");
    return read_term_file_path(path);
}

void write_output(const std::string& path, const TermFile& file) {
    if (path.empty() || path == "-") {
        write_term_file(std::cout, file);
        return;
    }
    write_term_file_path(path, file);
}

int cmd_reduce(const std::string& schema_name_, const std::string& in, const std::string& out,
               bool trace_wanted) {
    Schema schema = parse_schema(schema_name_);
    TermFile file = read_input(in);
    if (file.schema != schema) throw SchemaError("input file schema does not match --schema");
    if (file.unary) throw Error("reduce expects bilinear rows, not a unary file");

    ReduceTrace trace;
    TermList result = reduce(file.terms, WeightModel::for_schema(schema),
                             trace_wanted ? &trace : nullptr);
    if (trace_wanted) {
        for (std::size_t i = 0; i < trace.loops.size(); ++i) {
            std::cerr << "# loop " << (i + 1) << "\n";
            for (const auto& t : trace.loops[i])
                std::cerr << emit_row(t, RowFormat::Sparse) << "\n";
        }
    }
    TermFile outf{schema, file.format, false, std::move(result), {}};
    write_output(out, outf);
    return 0;
}

int cmd_classify(const std::string& schema_name_, const std::string& in, const std::string& bc_name_,
                 bool drop_time, const std::string& out, bool latex) {
    Schema schema = parse_schema(schema_name_);
    auto bc = bc_from_name(bc_name_);
    if (!bc) throw CLI::ValidationError("--bc", "expected none, clamped or hinged");
    TermFile file = read_input(in);
    if (file.schema != schema) throw SchemaError("input file schema does not match --schema");
    if (file.unary) throw Error("classify expects bilinear rows, not a unary file");

    Report rep = classify(file.terms, *bc, drop_time);
    std::string text = latex ? emit_latex(rep) : emit_table(rep);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot open '" + out + "' for writing");
        f << text;
    }
    return 0;
}

int cmd_conjugate(const std::string& op, const std::string& schema_name_, const std::string& out) {
    Schema schema = parse_schema(schema_name_);
    OperatorSpec spec;
    if (op == "second") {
        spec = {OperatorOrder::Second, false};
    } else if (op == "fourth") {
        spec = {OperatorOrder::Fourth, true};
    } else {
        throw CLI::ValidationError("--operator", "expected second or fourth");
    }
    Conjugation conj = conjugate(spec, WeightModel::for_schema(schema));
    if (conj.omitted_ell_t)
        std::cerr << "# note: the zeroth-order ell_t part of the conjugation is omitted\n";
    TermFile outf{schema, RowFormat::Sparse, true, {}, conj.expansion};
    write_output(out, outf);
    return 0;
}

int cmd_multiply(const std::string& left, const std::string& right, const std::string& out,
                 bool cross_only) {
    TermFile lf = read_input(left);
    TermFile rf = read_input(right);
    if (!lf.unary || !rf.unary) throw Error("multiply expects unary term files (kind=unary)");
    if (lf.schema != rf.schema) throw SchemaError("left and right schemas differ");
    TermList product = multiply(lf.unary_terms, rf.unary_terms, cross_only);
    TermFile outf{lf.schema, RowFormat::Sparse, false, std::move(product), {}};
    write_output(out, outf);
    return 0;
}

int cmd_verify(const std::string& schema_name_, const std::string& in, const std::string& out) {
    Schema schema = parse_schema(schema_name_);
    TermFile fi = read_input(in);
    TermFile fo = read_input(out);
    if (fi.schema != schema || fo.schema != schema)
        throw SchemaError("file schema does not match --schema");
    if (fi.unary || fo.unary) throw Error("verify expects bilinear rows");
    auto check = verify_identity(fi.terms, fo.terms, WeightModel::for_schema(schema));
    if (check.ok) {
        std::cout << "identity holds\n";
        return 0;
    }
    std::cout << "identity FAILS; difference:\n";
    for (const auto& t : check.diff) std::cout << emit_row(t, RowFormat::Sparse) << "\n";
    return 1;
}

int cmd_preset(const std::string& name, bool report, bool latex) {
    PresetResult result = run_preset(name);
    for (const auto& c : result.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << result.name << "/" << c.name << "\n";
        if (!c.pass) std::cout << c.detail;
    }
    if (report) std::cout << emit_table(result.report);
    if (latex) std::cout << emit_latex(result.report);
    return result.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Carleman integration-by-parts bookkeeping"};
    app.require_subcommand(1);

    std::string schema = "poly", in = "-", out, bc = "none", op = "fourth";
    std::string left, right, input_file, output_file, preset_name;
    bool trace = false, drop_time = false, latex = false, cross_only = false, report = false;

    auto* c_reduce = app.add_subcommand("reduce", "Reduce rows to terminal form");
    c_reduce->add_option("--schema", schema, "poly or exp")->required();
    c_reduce->add_option("--in", in, "input term file ('-' for stdin)");
    c_reduce->add_option("--out", out, "output term file (default stdout)");
    c_reduce->add_flag("--trace", trace, "print per-loop snapshots to stderr");

    auto* c_classify = app.add_subcommand("classify", "Group terminal rows into a report");
    c_classify->add_option("--schema", schema, "poly or exp")->required();
    c_classify->add_option("--in", in, "input term file ('-' for stdin)");
    c_classify->add_option("--bc", bc, "none, clamped or hinged");
    c_classify->add_flag("--drop-time-boundary", drop_time, "mark the time boundary dropped");
    c_classify->add_option("--out", out, "output file (default stdout)");
    c_classify->add_flag("--latex", latex, "emit LaTeX instead of the table format");

    auto* c_conj = app.add_subcommand("conjugate", "Expand the conjugated operator");
    c_conj->add_option("--operator", op, "second or fourth")->required();
    c_conj->add_option("--schema", schema, "poly or exp")->required();
    c_conj->add_option("--out", out, "output unary term file (default stdout)");

    auto* c_mul = app.add_subcommand("multiply", "Bilinear product of two unary files");
    c_mul->add_option("--left", left, "left unary term file")->required();
    c_mul->add_option("--right", right, "right unary term file")->required();
    c_mul->add_option("--out", out, "output term file (default stdout)");
    c_mul->add_flag("--cross-only", cross_only, "skip index-equal pairs");

    auto* c_verify = app.add_subcommand("verify", "Check input = output after removing flags");
    c_verify->add_option("--schema", schema, "poly or exp")->required();
    c_verify->add_option("--input", input_file, "pre-reduction term file")->required();
    c_verify->add_option("--output", output_file, "post-reduction term file")->required();

    auto* c_preset = app.add_subcommand("preset", "Run a built-in scenario");
    c_preset->add_option("name", preset_name, "preset name")->required();
    c_preset->add_flag("--report", report, "print the classification table");
    c_preset->add_flag("--latex", latex, "print the LaTeX report");

    try {
        app.parse(argc, argv);
        if (*c_reduce) return cmd_reduce(schema, in, out, trace);
        if (*c_classify) return cmd_classify(schema, in, bc, drop_time, out, latex);
        if (*c_conj) return cmd_conjugate(op, schema, out);
        if (*c_mul) return cmd_multiply(left, right, out, cross_only);
        if (*c_verify) return cmd_verify(schema, input_file, output_file);
        if (*c_preset) return cmd_preset(preset_name, report, latex);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
