#pragma once

#include <iosfwd>
#include <string>

#include "carleman/term.hpp"

namespace carleman {

// Fixed is the 8-column (POLY) / 14-column (EXP) comma-separated matrix row;
// Sparse is `coeff; scalars; factors; (bt,bx)(ct,cx); (dt,dx)` and covers
// symbols the fixed alphabet cannot hold (phi(k) with k >= 5, vphi_tt, gamma).
enum class RowFormat : std::uint8_t { Fixed, Sparse };

std::string_view format_name(RowFormat f);
std::optional<RowFormat> format_from_name(std::string_view name);

// Format is detected from the line itself (';' => sparse).
Term parse_row(const std::string& line, Schema schema, int line_no = 0);
std::string emit_row(const Term& term, RowFormat format);

// Unary rows only exist in the sparse format: `coeff; scalars; factors; (bt,bx); -`.
UnaryTerm parse_unary_row(const std::string& line, Schema schema, int line_no = 0);
std::string emit_unary_row(const UnaryTerm& term);

// Term files: UTF-8 text, first line `# schema=poly|exp format=fixed|sparse`
// with an optional `kind=unary`; blank lines and further '#' lines ignored.
struct TermFile {
    Schema schema = Schema::Poly;
    RowFormat format = RowFormat::Fixed;
    bool unary = false;
    TermList terms;
    UnaryList unary_terms;
};

TermFile read_term_file(std::istream& in, const std::string& name = "<stream>");
TermFile read_term_file_path(const std::string& path);
void write_term_file(std::ostream& out, const TermFile& file);
void write_term_file_path(const std::string& path, const TermFile& file);

}  // namespace carleman
