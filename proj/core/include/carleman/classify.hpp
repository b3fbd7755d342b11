#pragma once

#include <map>
#include <string>
#include <vector>

#include "carleman/term.hpp"

namespace carleman {

enum class BoundaryCondition : std::uint8_t { None, Clamped, Hinged };
enum class Sign : std::uint8_t { Positive, Negative, Indefinite };

std::string_view bc_name(BoundaryCondition bc);
std::optional<BoundaryCondition> bc_from_name(std::string_view name);

// Grading in the large parameters: total degree in lambda and s, tie-broken
// by lambda-degree, then by total weight-factor degree (the mu/phi powers
// separate rows the scalar degrees alone cannot).
struct Grade {
    int total = 0;
    int lam = 0;
    int factor_deg = 0;
    friend auto operator<=>(const Grade&, const Grade&) = default;
};

Grade grade_of(const Term& term);

struct GradedGroup {
    TermList rows;  // merged
    TermList leading, subleading, rest;
};

// Splits a merged group by grade: leading = maximal grade, subleading = next
// distinct grade, rest = everything below.
GradedGroup grade_group(TermList rows);

struct Report {
    Schema schema = Schema::Poly;
    BoundaryCondition bc = BoundaryCondition::None;
    bool time_boundary_dropped = false;

    TermList time_boundary;                          // d_t = 1
    std::map<BilinearPart, GradedGroup> space_boundary;  // d_x = 1, after filter
    TermList boundary_deleted;                       // audit of bc-filtered rows
    std::map<int, GradedGroup> energy;               // derivative order k -> (w_{x^k})^2 rows
    TermList cross;                                  // u_t u_x shape ((1,0),(0,1))
    TermList cross_other;                            // other bt=1 terminal shapes, reported not dropped

    TermList all_space_boundary() const;  // surviving boundary rows, merged
    TermList all_input() const;           // every group plus audit, re-merged
};

// Routes terminal rows into the report groups. Under Clamped, space-boundary
// rows touching x-orders {0,1} are deleted (t-orders ignored: u_t, u_tx
// vanish wherever u, u_x do); under Hinged, x-orders {0,2}. Deleted rows are
// retained in the audit list. Throws ContractError on a non-terminal row.
Report classify(const TermList& list, BoundaryCondition bc, bool drop_time_boundary);

// Aggregated weight-coefficient list B of the u_t u_x rows.
std::vector<WeightMonomial> cross_summary(const TermList& cross);

// Default sign assumptions: mu negative on (0,L) (x0 > L), vphi positive,
// everything else indefinite.
struct SignContext {
    std::map<FactorSymbol, Sign> assumptions;
    static SignContext defaults(Schema schema);
    Sign of(const FactorSymbol& sym) const;
};

// Verdict per term: coefficient sign, flipped once per odd power of a
// negative factor; any odd power of an indefinite factor makes the verdict
// indefinite.
std::vector<std::pair<Term, Sign>> sign_report(const TermList& leading, const SignContext& ctx);

std::string latex_term(const Term& term);
std::string latex_weight_monomial(const WeightMonomial& m);
std::string emit_latex(const Report& report);
std::string emit_table(const Report& report);

}  // namespace carleman
